#include "qlimits/constants.hpp"

#include "qlimits/error.hpp"

namespace qlimits {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::lookup: return "lookup";
        case ErrorKind::domain: return "domain";
        case ErrorKind::infeasible: return "infeasible";
        case ErrorKind::range: return "range";
        case ErrorKind::capacity: return "capacity";
        case ErrorKind::internal: return "internal";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

nlohmann::json constants_json() {
    const auto& k = constants();
    return {
        {"constants_version", std::string(kConstantsVersion)},
        {"hbar_J_s", k.hbar},
        {"h_J_s", k.h},
        {"kB_J_per_K", k.kB},
        {"c_m_per_s", k.c},
        {"G_m3_per_kg_s2", k.G},
        {"megaparsec_m", k.megaparsec},
        {"julian_year_s", k.julianYear},
        {"solar_luminosity_W", k.solarLuminosity},
    };
}

}  // namespace qlimits
