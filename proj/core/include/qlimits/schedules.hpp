#pragma once

#include "qlimits/dynamics.hpp"

namespace qlimits {

/// Free evolution under hbar*omega(|i><i| + |s><s|) with the largest omega the
/// work budget allows, omega = W / (hbar (1 + 2^(-n/2))), run for the
/// deterministic time t_F = pi sqrt(2^n) / (2 omega).
ControlSchedule ballistic_schedule(const SearchSpace& space, double work);

/// Alternating (0, E/hbar) and (E/hbar, 0) pulses, each lasting
/// hbar*pulsePhase/E; `iterations` oracle/diffusion pairs. Phase pi gives the
/// textbook Grover iterate up to a global phase.
ControlSchedule grover_pulsed_schedule(const SearchSpace& space, double pulseEnergy, double pulsePhase,
                                       int iterations);

/// Default Grover iteration count round(pi * 2^(n/2) / 4).
int grover_iterations(const SearchSpace& space);

enum class AdiabaticKind { linear, local };

inline constexpr int kDefaultAdiabaticSegments = 1024;

/// Total runtime of the local-adiabatic sweep, where dc/dt = eps*Delta(c)^2/(hbar*E)
/// and Delta(c) = E sqrt(1 - 4c(1-c)(1 - 2^-n)).
double local_adiabatic_runtime(const SearchSpace& space, double energyScale, double errorBudget);

/// Sweep (hbar*omega_i, hbar*omega_s) = ((1-c)E, cE) from c = 0 to 1 over the
/// local-adiabatic runtime. `linear` paces c uniformly in time over the same
/// runtime, `local` follows the closed-form local-adiabatic c(t). Segments
/// are uniform in time with c sampled at segment midpoints (>= 256).
ControlSchedule adiabatic_schedule(const SearchSpace& space, double energyScale, double errorBudget,
                                   AdiabaticKind kind, int segments = kDefaultAdiabaticSegments);

/// Sweep parameter c(t) of the local-adiabatic schedule.
double local_adiabatic_parameter(const SearchSpace& space, double energyScale, double errorBudget, double t);

}  // namespace qlimits
