#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qlimits {

/// Non-negative time span in seconds.
class Duration {
public:
    constexpr Duration() = default;
    static Duration from_seconds(double seconds);

    constexpr double seconds() const noexcept { return seconds_; }

    friend constexpr auto operator<=>(const Duration&, const Duration&) = default;

private:
    constexpr explicit Duration(double s) : seconds_(s) {}
    double seconds_ = 0.0;
};

/// Parses "<decimal><suffix>" with suffix one of s, a, Ga, Ta.
/// "a" is the Julian year. Throws Error{parse} naming the bad token.
Duration parse_duration(std::string_view text);

/// Formats as seconds with 17 significant digits, e.g. "1.5s".
std::string format_duration(Duration d);

}  // namespace qlimits
