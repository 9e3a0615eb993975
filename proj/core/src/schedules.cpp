#include "qlimits/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorKind::domain, std::string(what) + " must be finite and > 0", format_number(value));
    }
}

void check_adiabatic_inputs(double energyScale, double errorBudget) {
    require_positive(energyScale, "energy scale");
    if (!(errorBudget > 0.0 && errorBudget < 1.0)) {
        throw Error(ErrorKind::domain, "error budget must lie in (0, 1)", format_number(errorBudget));
    }
}

}  // namespace

ControlSchedule ballistic_schedule(const SearchSpace& space, double work) {
    require_positive(work, "work");
    const double omega = work / (constants().hbar * (1.0 + space.overlap()));
    const double tF = std::numbers::pi * space.sqrt_dimension() / (2.0 * omega);
    return ControlSchedule({{tF, omega, omega}});
}

ControlSchedule grover_pulsed_schedule(const SearchSpace& space, double pulseEnergy, double pulsePhase,
                                       int iterations) {
    (void)space;
    require_positive(pulseEnergy, "pulse energy");
    if (!(pulsePhase > 0.0 && pulsePhase <= 2.0 * std::numbers::pi)) {
        throw Error(ErrorKind::domain, "pulse phase must lie in (0, 2pi]", format_number(pulsePhase));
    }
    if (iterations < 1) throw Error(ErrorKind::domain, "iterations must be >= 1", std::to_string(iterations));

    const double hbar = constants().hbar;
    const double omega = pulseEnergy / hbar;
    const double dt = hbar * pulsePhase / pulseEnergy;
    std::vector<Segment> segs;
    segs.reserve(2 * static_cast<std::size_t>(iterations));
    for (int k = 0; k < iterations; ++k) {
        segs.push_back({dt, 0.0, omega});  // oracle
        segs.push_back({dt, omega, 0.0});  // diffusion
    }
    return ControlSchedule(std::move(segs));
}

int grover_iterations(const SearchSpace& space) {
    return static_cast<int>(std::lround(std::numbers::pi * space.sqrt_dimension() / 4.0));
}

double local_adiabatic_runtime(const SearchSpace& space, double energyScale, double errorBudget) {
    check_adiabatic_inputs(energyScale, errorBudget);
    // T = hbar N atan(sqrt(N-1)) / (eps E sqrt(N-1)), with N/sqrt(N-1) = sqrt(N)/q.
    const double sqrtN = space.sqrt_dimension();
    const double q = space.complement();
    return constants().hbar * (sqrtN / q) * std::atan(sqrtN * q) / (errorBudget * energyScale);
}

double local_adiabatic_parameter(const SearchSpace& space, double energyScale, double errorBudget, double t) {
    check_adiabatic_inputs(energyScale, errorBudget);
    // u = 2c - 1 obeys du/dt = (2 eps E / hbar)(1/N + u^2 (1 - 1/N)).
    const double sqrtN = space.sqrt_dimension();
    const double q = space.complement();
    const double ab = q / sqrtN;            // sqrt(N-1)/N
    const double a_over_b = 1.0 / (sqrtN * q);  // 1/sqrt(N-1)
    const double angle = ab * 2.0 * errorBudget * energyScale * t / constants().hbar - std::atan(sqrtN * q);
    const double u = a_over_b * std::tan(angle);
    return std::clamp(0.5 * (1.0 + u), 0.0, 1.0);
}

ControlSchedule adiabatic_schedule(const SearchSpace& space, double energyScale, double errorBudget,
                                   AdiabaticKind kind, int segments) {
    check_adiabatic_inputs(energyScale, errorBudget);
    if (segments < 256) throw Error(ErrorKind::domain, "adiabatic sweep needs >= 256 segments", std::to_string(segments));

    const double T = local_adiabatic_runtime(space, energyScale, errorBudget);
    const double dt = T / segments;
    const double omegaE = energyScale / constants().hbar;
    std::vector<Segment> segs;
    segs.reserve(static_cast<std::size_t>(segments));
    for (int j = 0; j < segments; ++j) {
        const double tMid = (j + 0.5) * dt;
        const double c = kind == AdiabaticKind::linear ? tMid / T
                                                       : local_adiabatic_parameter(space, energyScale, errorBudget, tMid);
        segs.push_back({dt, (1.0 - c) * omegaE, c * omegaE});
    }
    return ControlSchedule(std::move(segs));
}

}  // namespace qlimits
