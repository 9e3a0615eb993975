#include "qlimits/keylength.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlimits/bounds.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/log2math.hpp"

namespace qlimits {

namespace {

void check_budget(double work, double time) {
    if (!(work > 0.0)) throw Error(ErrorKind::domain, "work must be > 0", "work", work);
    if (!(time > 0.0)) throw Error(ErrorKind::domain, "time must be > 0", "time", time);
}

}  // namespace

double log2_quantum_keyspace(double work, double time, double successProbability) {
    check_budget(work, time);
    if (!(successProbability > 0.0 && successProbability <= 1.0)) {
        throw Error(ErrorKind::domain, "psuccess must lie in (0, 1]", "psuccess", successProbability);
    }
    const double x = std::log2(work) + std::log2(time) - std::log2(constants().hbar);
    return log2math::pow2_plus_one(2.0 * x) - std::log2(successProbability);
}

int equivalent_quantum_keylength(double work, double time, double successProbability) {
    return static_cast<int>(log2math::snap_ceil(log2_quantum_keyspace(work, time, successProbability)));
}

int max_recoverable_keylength(double work, double time, double successProbability) {
    return static_cast<int>(log2math::snap_floor(log2_quantum_keyspace(work, time, successProbability)));
}

int max_deterministic_keylength(double work, double time) {
    check_budget(work, time);
    const double x = 2.0 * work * time / (std::numbers::pi * constants().hbar) - 1.0;
    if (!(x > 1.0)) return 0;
    return static_cast<int>(std::max(0LL, log2math::snap_floor(2.0 * std::log2(x))));
}

ClassicalKeylength classical_keylength(double work, double time, double temperature, double successProbability) {
    BoundQuery q;
    q.work = work;
    q.time = time;
    q.temperature = temperature;
    q.successProbability = successProbability;
    q.unknown = Unknown::bits;
    try {
        const auto r = classical_bound(q);
        return {static_cast<int>(log2math::snap_ceil(r.value)), false};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::infeasible) return {0, true};
        throw;
    }
}

CosmologyParams CosmologyParams::from_km_s_mpc(double h0KmPerSecPerMpc, double omegaLambda,
                                               std::optional<double> rhoMatter) {
    CosmologyParams p;
    p.H0 = h0KmPerSecPerMpc * 1e3 / constants().megaparsec;
    p.omegaLambda = omegaLambda;
    p.rhoMatter = rhoMatter;
    p.validate();
    return p;
}

CosmologyParams CosmologyParams::planck2018() { return from_km_s_mpc(67.36, 0.6847, 2.69e-27); }

void CosmologyParams::validate() const {
    if (!(H0 > 0.0 && std::isfinite(H0))) throw Error(ErrorKind::domain, "H0 must be > 0", "h0", H0);
    if (!(omegaLambda > 0.0 && omegaLambda < 1.0)) {
        throw Error(ErrorKind::domain, "Omega_Lambda must lie in (0, 1)", "omega-lambda", omegaLambda);
    }
    if (rhoMatter && !(*rhoMatter > 0.0)) throw Error(ErrorKind::domain, "rho_m must be > 0", "rho-m", *rhoMatter);
}

double cosmic_energy(const CosmologyParams& params, CosmicForm form) {
    params.validate();
    const auto& k = constants();
    if (form == CosmicForm::fromDensity) {
        if (!params.rhoMatter) throw Error(ErrorKind::domain, "fromDensity needs rho_m", "rho-m");
        const double radius = k.c / (std::sqrt(params.omegaLambda) * params.H0);
        return 4.0 / 3.0 * std::numbers::pi * radius * radius * radius * *params.rhoMatter * k.c * k.c;
    }
    return (1.0 - params.omegaLambda) * std::pow(k.c, 5) /
           (2.0 * params.H0 * std::pow(params.omegaLambda, 1.5) * k.G);
}

std::vector<KeylengthReport> build_report(std::span<const Scenario> scenarios) {
    std::vector<KeylengthReport> rows;
    rows.reserve(scenarios.size());
    for (const auto& s : scenarios) {
        KeylengthReport row;
        row.scenario = s;
        try {
            s.validate();
            const double t = s.duration.seconds();
            row.quantumSecureBits = equivalent_quantum_keylength(s.work, t, s.successProbability);
            row.boundsUsed.emplace_back("quantum: n = ceil(log2(((W t / hbar)^2 + 1) / P_s))");
            if (s.classicalKeyBits) {
                const auto c = classical_keylength(s.work, t, s.temperature, s.successProbability);
                row.classicalBits = c.bits;
                row.classicalConsistent = !c.belowFloor && std::abs(c.bits - *s.classicalKeyBits) <= 1;
                row.boundsUsed.emplace_back("classical: E_c = 2^n P_s (k_B T ln2 + h/4t) + 2n k_B T ln2");
            }
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qlimits
