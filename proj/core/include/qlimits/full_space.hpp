#pragma once

#include <cstdint>

#include "qlimits/dynamics.hpp"

namespace qlimits {

inline constexpr int kFullSpaceMaxBits = 14;

/// Brute-force reference for evolve(): integrates the full 2^n-amplitude
/// state under H = hbar*omega_i|i><i| + hbar*omega_s|s><s| with |s> the
/// computational basis state `solutionIndex`. Each segment is propagated by
/// a sub-stepped Taylor series of exp(-iH dt) acting on the full vector, so
/// nothing from the two-level reduction is reused. Samples at the same times
/// as evolve(). Throws Error{capacity} for n > 14, Error{range} for a bad
/// solution index.
Trace full_space_reference(const SearchSpace& space, const ControlSchedule& schedule, double sampleStep,
                           std::uint64_t solutionIndex);

}  // namespace qlimits
