#pragma once

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "qlimits/bht.hpp"
#include "qlimits/bounds.hpp"
#include "qlimits/error.hpp"
#include "qlimits/keylength.hpp"
#include "qlimits/scenario.hpp"

namespace qlimits {

nlohmann::json to_json(const BoundQuery& query);
/// {bound_kind, formula_tag, inputs, value, unit, constants_version, ...}
nlohmann::json to_json(const BoundResult& result);
/// {n, k, log2_k, t_s_s, t_total_s, work_J, log2_work_J, constants_version, ...}
nlohmann::json to_json(const BhtPlan& plan);
nlohmann::json to_json(const Scenario& scenario);
nlohmann::json to_json(const KeylengthReport& row);
nlohmann::json to_json(std::span<const KeylengthReport> rows);
/// {"error": {kind, message, offending_input[, value]}}
nlohmann::json to_json(const Error& error);

inline constexpr const char* kReportCsvHeader = "classical_bits,work_J,time_s,p_success,scenario,quantum_bits";

/// Table-shaped CSV; missing classical bits print as "-".
void write_report_csv(std::ostream& out, std::span<const KeylengthReport> rows);

}  // namespace qlimits
