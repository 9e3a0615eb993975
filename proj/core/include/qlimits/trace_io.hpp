#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "qlimits/dynamics.hpp"

namespace qlimits {

inline constexpr const char* kTraceCsvHeader = "t_s,omega_i,omega_s,P_s,P_i,re_A,im_A,alpha_ab,norm_error";

/// CSV with kTraceCsvHeader and 17 significant digits per value.
void write_trace_csv(std::ostream& out, const Trace& trace);
/// JSON array, one object per sample with the CSV column names as keys.
nlohmann::json trace_to_json(const Trace& trace);

/// {"segments":[{"duration_s":..,"omega_i_radps":..,"omega_s_radps":..}]}
nlohmann::json schedule_to_json(const ControlSchedule& schedule);
/// Accepts the schedule document above, or any object carrying it under a
/// "schedule" key. Throws Error{parse}.
ControlSchedule schedule_from_json(const nlohmann::json& doc);

/// "%.17g"
std::string format_number(double value);

}  // namespace qlimits
