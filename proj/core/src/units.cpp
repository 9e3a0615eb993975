#include "qlimits/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

constexpr std::array<std::pair<std::string_view, double>, 4> kSuffixes{{
    {"s", 1.0},
    {"a", kConstants.julianYear},
    {"Ga", 1e9 * kConstants.julianYear},
    {"Ta", 1e12 * kConstants.julianYear},
}};

}  // namespace

Duration Duration::from_seconds(double seconds) {
    if (!(seconds >= 0.0) || !std::isfinite(seconds)) {
        throw Error(ErrorKind::domain, "duration must be a finite non-negative number of seconds",
                    format_number(seconds));
    }
    return Duration(seconds);
}

Duration parse_duration(std::string_view text) {
    const std::string token(text);
    if (text.empty()) throw Error(ErrorKind::parse, "empty duration", token);
    if (text.front() == '-') throw Error(ErrorKind::parse, "negative duration", token);

    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc{} || ptr == first) {
        throw Error(ErrorKind::parse, "duration has no numeric prefix", token);
    }
    const std::string_view suffix(ptr, static_cast<std::size_t>(last - ptr));
    for (const auto& [name, scale] : kSuffixes) {
        if (suffix == name) {
            const double seconds = value * scale;
            if (!std::isfinite(seconds)) throw Error(ErrorKind::parse, "duration out of range", token);
            return Duration::from_seconds(seconds);
        }
    }
    throw Error(ErrorKind::parse, "unknown duration unit '" + std::string(suffix) + "' (expected s, a, Ga or Ta)",
                std::string(suffix.empty() ? text : suffix));
}

std::string format_duration(Duration d) { return format_number(d.seconds()) + "s"; }

}  // namespace qlimits
