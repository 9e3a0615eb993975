#include "qlimits/serialize.hpp"

#include <ostream>
#include <string>

#include "qlimits/constants.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

using nlohmann::json;

namespace {

void put(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

}  // namespace

json to_json(const BoundQuery& q) {
    json j = json::object();
    put(j, "n", q.bits);
    put(j, "work_J", q.work);
    put(j, "time_s", q.time);
    put(j, "temperature_K", q.temperature);
    put(j, "p_success", q.successProbability);
    if (q.correctedErrors) j["corrected_errors"] = *q.correctedErrors;
    j["unknown"] = std::string(to_string(q.unknown));
    return j;
}

json to_json(const BoundResult& r) {
    return {
        {"bound_kind", std::string(to_string(r.kind))},
        {"formula_tag", r.formulaTag},
        {"inputs", to_json(r.inputs)},
        {"value", r.value},
        {"unit", r.unit},
        {"offset_regime", r.offsetRegime},
        {"saturated", r.saturated},
        {"constants_version", std::string(kConstantsVersion)},
    };
}

json to_json(const BhtPlan& p) {
    return {
        {"n", p.imageBits},
        {"k", p.samples},
        {"log2_k", p.log2Samples},
        {"k_rounded", p.roundedSamples},
        {"t_s_s", p.quantumTime},
        {"t_total_s", p.totalTime},
        {"work_J", p.work},
        {"log2_work_J", p.log2Work},
        {"work_rounded_J", p.roundedWork},
        {"closed_form_work_J", p.closedFormWork},
        {"log2_closed_form_work_J", p.log2ClosedFormWork},
        {"constants_version", std::string(kConstantsVersion)},
    };
}

json to_json(const Scenario& s) {
    json j = {
        {"name", s.name},
        {"work_J", s.work},
        {"time_s", s.duration.seconds()},
        {"temperature_K", s.temperature},
        {"p_success", s.successProbability},
    };
    j["classical_bits"] = s.classicalKeyBits ? json(*s.classicalKeyBits) : json(nullptr);
    return j;
}

json to_json(const KeylengthReport& row) {
    json j = {
        {"scenario", to_json(row.scenario)},
        {"quantum_bits", row.quantumSecureBits},
        {"bounds_used", row.boundsUsed},
    };
    j["classical_bits"] = row.classicalBits ? json(*row.classicalBits) : json(nullptr);
    if (row.classicalConsistent) j["classical_consistent"] = *row.classicalConsistent;
    if (row.error) j["error"] = *row.error;
    return j;
}

json to_json(std::span<const KeylengthReport> rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return {{"rows", std::move(arr)}, {"constants_version", std::string(kConstantsVersion)}};
}

json to_json(const Error& e) {
    json inner = {
        {"kind", std::string(to_string(e.kind()))},
        {"message", e.what()},
        {"offending_input", e.offending_input()},
    };
    if (e.value()) inner["value"] = *e.value();
    return {{"error", std::move(inner)}};
}

void write_report_csv(std::ostream& out, std::span<const KeylengthReport> rows) {
    out << kReportCsvHeader << '\n';
    for (const auto& r : rows) {
        out << (r.classicalBits ? std::to_string(*r.classicalBits) : std::string("-")) << ','
            << format_number(r.scenario.work) << ',' << format_number(r.scenario.duration.seconds()) << ','
            << format_number(r.scenario.successProbability) << ',' << r.scenario.name << ','
            << (r.error ? std::string("-") : std::to_string(r.quantumSecureBits)) << '\n';
    }
}

}  // namespace qlimits
