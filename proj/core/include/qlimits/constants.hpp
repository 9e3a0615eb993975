#pragma once

#include <numbers>
#include <string_view>

#include <nlohmann/json.hpp>

namespace qlimits {

/// CODATA-2018 values plus the handful of astronomical constants used by the
/// scenario registry. `hbar` is derived from the exact `h` so that
/// h == 2*pi*hbar holds to rounding.
struct PhysicalConstants {
    double hbar;             // J s
    double h;                // J s
    double kB;               // J/K
    double c;                // m/s
    double G;                // m^3 / (kg s^2)
    double megaparsec;       // m
    double julianYear;       // s
    double solarLuminosity;  // W
};

inline constexpr PhysicalConstants kConstants{
    .hbar = 6.62607015e-34 / (2.0 * std::numbers::pi),
    .h = 6.62607015e-34,
    .kB = 1.380649e-23,
    .c = 2.99792458e8,
    .G = 6.67430e-11,
    .megaparsec = 3.0856775814913673e22,
    .julianYear = 3.15576e7,
    .solarLuminosity = 3.828e26,
};

inline constexpr std::string_view kConstantsVersion = "qlimits-constants/1 (CODATA-2018)";

constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

/// Versioned, machine-readable constants table.
nlohmann::json constants_json();

}  // namespace qlimits
