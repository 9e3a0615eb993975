#include "qlimits/scenario.hpp"

#include <array>
#include <cmath>

#include "qlimits/error.hpp"

namespace qlimits {

namespace {

constexpr std::array<std::string_view, 3> kNames{"datacenter", "dyson", "cosmic"};

}  // namespace

void Scenario::validate() const {
    if (!(work > 0.0) || !std::isfinite(work)) throw Error(ErrorKind::domain, "scenario work must be > 0", name);
    if (!(duration.seconds() > 0.0)) throw Error(ErrorKind::domain, "scenario duration must be > 0", name);
    if (!(temperature >= 0.0)) throw Error(ErrorKind::domain, "scenario temperature must be >= 0", name);
    if (!(successProbability > 0.0 && successProbability <= 1.0)) {
        throw Error(ErrorKind::domain, "scenario success probability must lie in (0, 1]", name);
    }
    if (classicalKeyBits && *classicalKeyBits <= 0) {
        throw Error(ErrorKind::domain, "classical key bits must be positive", name);
    }
}

Scenario scenario(std::string_view name) {
    if (name == "datacenter") {
        return {"datacenter", 1e16, parse_duration("5a"), 300.0, 1e-2, 128};
    }
    if (name == "dyson") {
        return {"dyson", 8e43, parse_duration("5Ga"), 2.7, 3e-11, 256};
    }
    if (name == "cosmic") {
        return {"cosmic", 4.6e69, parse_duration("100Ta"), 2.7, 1e-12, std::nullopt};
    }
    throw Error(ErrorKind::lookup, "unknown scenario '" + std::string(name) + "'; valid: datacenter, dyson, cosmic",
                std::string(name));
}

std::span<const std::string_view> scenario_names() { return kNames; }

std::vector<Scenario> all_scenarios() {
    std::vector<Scenario> out;
    out.reserve(kNames.size());
    for (auto name : kNames) out.push_back(scenario(name));
    return out;
}

}  // namespace qlimits
