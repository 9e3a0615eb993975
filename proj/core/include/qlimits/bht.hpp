#pragma once

namespace qlimits {

/// Collision-search plan: k classical samples stored, then a quantum search
/// over the rest of the domain within the remaining time.
struct BhtPlan {
    double imageBits = 0.0;
    double samples = 0.0;  // continuous optimum k*
    double log2Samples = 0.0;
    double roundedSamples = 0.0;  // better of floor/ceil(k*)
    double quantumTime = 0.0;     // s
    double totalTime = 0.0;       // s
    double work = 0.0;            // J, three-term expression at k*
    double log2Work = 0.0;
    double roundedWork = 0.0;  // J at roundedSamples
    double closedFormWork = 0.0;  // (3/2)(2^n P_s D)^(1/3) hbar/t
    double log2ClosedFormWork = 0.0;
};

/// k(n+1)E_L + k h/(4 t_T) + sqrt(2^n P_s/k - 1) hbar/t_T.
/// Throws Error{domain} unless 1 <= k <= 2^n P_s.
double bht_work(double imageBits, double samples, double totalTime, double temperature,
                double successProbability);
double log2_bht_work(double imageBits, double samples, double totalTime, double temperature,
                     double successProbability);

/// Quantum share of t_T that balances the Margolus-Levitin sampling rate
/// against the search: t_s = t_T / (k 2pi / (4 sqrt(2^n P_s/k - 1)) + 1).
double bht_quantum_time(double imageBits, double samples, double totalTime, double successProbability);

/// Minimizes bht_work over k for large 2^n P_s/k:
///   D  = 2 (n+1) E_L t_T / hbar + pi
///   k* = (2^n P_s)^(1/3) / D^(2/3)
///   W* = (3/2) (2^n P_s D)^(1/3) hbar / t_T
/// k* is clamped to [1, 2^n P_s].
BhtPlan bht_optimal(double imageBits, double totalTime, double temperature, double successProbability);

/// log2 of the closed-form minimum W*(n).
double log2_bht_min_work(double imageBits, double totalTime, double temperature, double successProbability);

/// Smallest integer n with W*(n) >= workBudget (ceil of the real root).
int bht_min_image_bits(double workBudget, double totalTime, double temperature, double successProbability);

}  // namespace qlimits
