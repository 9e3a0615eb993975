#include "qlimits/trace_io.hpp"

#include <cstdio>
#include <ostream>

#include "qlimits/error.hpp"

namespace qlimits {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << kTraceCsvHeader << '\n';
    for (const auto& p : trace.points) {
        out << format_number(p.t) << ',' << format_number(p.omega_i) << ',' << format_number(p.omega_s) << ','
            << format_number(p.obs.P_s) << ',' << format_number(p.obs.P_i) << ',' << format_number(p.obs.A.real())
            << ',' << format_number(p.obs.A.imag()) << ',' << format_number(p.obs.alpha_ab) << ','
            << format_number(p.normError) << '\n';
    }
}

nlohmann::json trace_to_json(const Trace& trace) {
    auto arr = nlohmann::json::array();
    for (const auto& p : trace.points) {
        arr.push_back({
            {"t_s", p.t},
            {"omega_i", p.omega_i},
            {"omega_s", p.omega_s},
            {"P_s", p.obs.P_s},
            {"P_i", p.obs.P_i},
            {"re_A", p.obs.A.real()},
            {"im_A", p.obs.A.imag()},
            {"alpha_ab", p.obs.alpha_ab},
            {"norm_error", p.normError},
        });
    }
    return arr;
}

nlohmann::json schedule_to_json(const ControlSchedule& schedule) {
    auto segs = nlohmann::json::array();
    for (const auto& s : schedule.segments()) {
        segs.push_back({{"duration_s", s.duration}, {"omega_i_radps", s.omega_i}, {"omega_s_radps", s.omega_s}});
    }
    return {{"segments", std::move(segs)}};
}

ControlSchedule schedule_from_json(const nlohmann::json& doc) {
    const nlohmann::json* root = &doc;
    if (doc.is_object() && doc.contains("schedule")) root = &doc.at("schedule");
    if (!root->is_object() || !root->contains("segments") || !root->at("segments").is_array()) {
        throw Error(ErrorKind::parse, "schedule document needs a \"segments\" array", "segments");
    }
    std::vector<Segment> segs;
    for (const auto& item : root->at("segments")) {
        Segment s;
        for (const char* key : {"duration_s", "omega_i_radps", "omega_s_radps"}) {
            if (!item.is_object() || !item.contains(key) || !item.at(key).is_number()) {
                throw Error(ErrorKind::parse, std::string("segment is missing numeric \"") + key + "\"", key);
            }
        }
        s.duration = item.at("duration_s").get<double>();
        s.omega_i = item.at("omega_i_radps").get<double>();
        s.omega_s = item.at("omega_s_radps").get<double>();
        segs.push_back(s);
    }
    if (segs.empty()) throw Error(ErrorKind::parse, "schedule has no segments", "segments");
    return ControlSchedule(std::move(segs));
}

}  // namespace qlimits
