#pragma once

#include "qlimits/dynamics.hpp"
#include "qlimits/schedules.hpp"

namespace qlimits {

struct ModulationMeasurement {
    Complex A0;
    Complex averagedA;
    /// |<A>| / |A0|
    double suppression = 0.0;
    /// 1 - r^2/4
    double predicted = 0.0;
};

/// Starts from the midpoint of a ballistic run (P_i ~ P_s ~ 1/2, A almost
/// imaginary), modulates the detuning as r*omega_c*sin(omega_c t) with the
/// mean frequency held at `omega`, and time-averages A over whole periods.
ModulationMeasurement measure_modulated_suppression(const SearchSpace& space, double r, double omega = 1.0,
                                                    int periods = 4, int segmentsPerPeriod = 64);

struct AdiabaticRuntime {
    double runtime = 0.0;  // s
    double pacing = 0.0;   // errorBudget value that produced it
    double infidelity = 0.0;
};

/// Shortest local-adiabatic runtime whose final infidelity 1 - P_s stays at
/// or below `targetInfidelity` for every longer runtime on a log grid of
/// pacing values, refined by bisection.
AdiabaticRuntime adiabatic_runtime_for_infidelity(const SearchSpace& space, double energyScale,
                                                  double targetInfidelity,
                                                  int segments = kDefaultAdiabaticSegments);

struct PulseMaximum {
    int iterations = 0;
    double P_s = 0.0;
};

/// Runs pulse pairs until P_s first stops increasing.
PulseMaximum grover_first_maximum(const SearchSpace& space, double pulseEnergy, double pulsePhase,
                                  int maxIterations);

/// Least-squares slope of the unwrapped alpha_ab(t) under constant detuning,
/// starting from the ballistic midpoint state.
double fit_phase_velocity(const SearchSpace& space, double omega, double delta_omega, double window,
                          int samples = 200);

}  // namespace qlimits
