#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlimits/scenario.hpp"

namespace qlimits {

/// log2(((W t / hbar)^2 + 1) / P_s): the real key length at which the
/// quantum search bound meets the budget exactly.
double log2_quantum_keyspace(double work, double time, double successProbability);

/// Smallest n whose quantum work requirement reaches the budget (ceil).
int equivalent_quantum_keylength(double work, double time, double successProbability);
/// Largest n still recoverable within the budget (floor).
int max_recoverable_keylength(double work, double time, double successProbability);
/// floor(2 log2(2 W t / (pi hbar) - 1)) from the ballistic deterministic
/// time; 0 when no n >= 1 can be reached.
int max_deterministic_keylength(double work, double time);

struct ClassicalKeylength {
    int bits = 0;
    /// Budget is below the requirement for n = 1; bits is 0.
    bool belowFloor = false;
};

/// Smallest n whose classical work requirement reaches the budget.
ClassicalKeylength classical_keylength(double work, double time, double temperature, double successProbability);

struct CosmologyParams {
    double H0 = 0.0;  // 1/s
    double omegaLambda = 0.0;
    std::optional<double> rhoMatter;  // kg/m^3

    static CosmologyParams from_km_s_mpc(double h0KmPerSecPerMpc, double omegaLambda,
                                         std::optional<double> rhoMatter = std::nullopt);
    /// H0 = 67.36 km/s/Mpc, Omega_Lambda = 0.6847, rho_m = 2.69e-27 kg/m^3.
    static CosmologyParams planck2018();

    void validate() const;
};

enum class CosmicForm { fromDensity, fromOmega };

/// Mass-energy inside the event horizon of a Lambda-dominated universe.
///   fromDensity: (4/3) pi (c / (sqrt(Omega_L) H0))^3 rho_m c^2
///   fromOmega:   (1 - Omega_L) c^5 / (2 H0 Omega_L^(3/2) G)
double cosmic_energy(const CosmologyParams& params, CosmicForm form);

struct KeylengthReport {
    Scenario scenario;
    std::optional<int> classicalBits;
    /// classicalBits within 1 of scenario.classicalKeyBits.
    std::optional<bool> classicalConsistent;
    int quantumSecureBits = 0;
    std::vector<std::string> boundsUsed;
    /// Set when a solver failed for this row; other fields are then partial.
    std::optional<std::string> error;
};

/// One row per scenario; a failing row records its error and does not stop
/// the others.
std::vector<KeylengthReport> build_report(std::span<const Scenario> scenarios);

}  // namespace qlimits
