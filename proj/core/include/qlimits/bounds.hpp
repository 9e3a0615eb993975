#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qlimits/dynamics.hpp"

namespace qlimits {

enum class Unknown { work, time, successProbability, bits };
enum class BoundKind { classical, quantum, gate, ballistic, bht };

std::string_view to_string(Unknown u);
std::string_view to_string(BoundKind k);
/// Accepts work, time, psuccess, n. Throws Error{parse}.
Unknown parse_unknown(std::string_view text);

/// (n, W, t, T, P_s) with exactly one field to be solved for. Fields that
/// are not the unknown must be provided when the bound needs them.
struct BoundQuery {
    std::optional<double> bits;
    std::optional<double> work;         // J
    std::optional<double> time;         // s
    std::optional<double> temperature;  // K
    std::optional<double> successProbability;
    std::optional<long long> correctedErrors;  // gate bound only
    Unknown unknown = Unknown::work;

    /// Throws Error{domain} for non-positive inputs or P_s > 1.
    void validate() const;

    friend bool operator==(const BoundQuery&, const BoundQuery&) = default;
};

struct BoundResult {
    double value = 0.0;
    BoundKind kind = BoundKind::quantum;
    std::string formulaTag;
    BoundQuery inputs;
    std::string unit;
    /// Bound is vacuous: 2^n P_s <= 1, so no dynamic work is required.
    bool offsetRegime = false;
    /// Solved probability exceeded 1 and was capped.
    bool saturated = false;
};

/// k_B T ln 2.
double landauer_energy(double temperature);
/// h / (4 dt).
double margolus_levitin_energy(double orthogonalizationTime);

/// E_c = 2^n P_s (k_B T ln2 + h/(4t)) + 2n k_B T ln2, in log2(J).
double log2_classical_work(double bits, double successProbability, double time, double temperature);
double classical_work(double bits, double successProbability, double time, double temperature);

/// Solves the classical search bound for the query's unknown. Solving for n
/// returns the real root of E_c(n) = W. Throws Error{infeasible} (value =
/// floor) when the budget cannot cover the 2n E_L initialization floor.
BoundResult classical_bound(const BoundQuery& query);

/// sqrt(2^n P_s - 1) hbar / t in log2(J); -inf in the offset regime.
double log2_quantum_work(double bits, double successProbability, double time);
double quantum_work(double bits, double successProbability, double time);

/// Inverts W >= sqrt(2^n P_s - 1) hbar/t. Solving for n returns the largest
/// real n satisfying the bound; callers round.
BoundResult quantum_bound(const BoundQuery& query);

/// Time t at which a constant power supply P satisfies P*t = W_q(n, P_s, t).
double quantum_time_at_power(double bits, double successProbability, double power);
/// Same for the classical bound (positive root of the quadratic in t).
double classical_time_at_power(double bits, double successProbability, double power, double temperature);

/// (2n+K) E_L + max(hbar (sqrt(P_s 2^n) - 1)(pi - 2^(1-n/2)) / t, 0).
double gate_bound(double bits, double successProbability, double time, long long correctedErrors,
                  double temperature);
BoundResult gate_bound(const BoundQuery& query);

/// 1/2^n + (1 - 1/2^n) sin^2(W t / ((sqrt(2^n) + 1) hbar)).
/// Throws Error{range} for t outside [0, t_F].
double ballistic_success(double bits, double work, double time);
/// t_F = (pi/2)(sqrt(2^n) + 1) hbar / W.
double ballistic_deterministic_time(double bits, double work);
BoundResult ballistic_bound(const BoundQuery& query);

/// Dispatch on kind (bht excluded).
BoundResult solve_bound(BoundKind kind, const BoundQuery& query);

/// b(k) = (1+k) / (1 + sqrt(k^2 + 2^(-n)(1-k^2)))^2 for 0 <= k <= 1.
double prefactor_b(double k, double bits);

struct PrefactorOptimum {
    double k = 0.0;
    double b = 0.0;
};

/// Golden-section argmax of prefactor_b over k. The bracket is [0, 1e-2],
/// widened to cover 10/sqrt(3*2^n) when n is small enough for the optimum
/// to sit outside it.
PrefactorOptimum optimal_k(double bits, double tolerance = 1e-14);

/// (sum_j |a_j|^2 |omega_j|^m)^(1/m) hbar, evaluated with log-sum-exp.
/// Throws Error{domain} if all overlaps vanish, the overlaps are not
/// normalized, or m is not a positive even integer.
double work_floor(std::span<const double> spectrum, std::span<const Complex> overlaps, int m);
/// m -> infinity limit: hbar * max |omega_j| over occupied levels.
double work_floor_limit(std::span<const double> spectrum, std::span<const Complex> overlaps);

enum class InitMode { generic, knownPlaintext };

/// 2n E_L (generic) or 4n E_L (known plaintext).
double init_readout_work(double bits, double temperature, InitMode mode);

/// Canonical-ensemble battery: <E> = U + N k_B T / 2, dE = sqrt(N/2) k_B T.
double battery_relative_uncertainty(double degreesOfFreedom, double temperature, double potentialEnergy);

}  // namespace qlimits
