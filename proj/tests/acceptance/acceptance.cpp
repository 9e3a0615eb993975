// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here; reference values are either
// published anchors or recomputed by the independent oracles in support/.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "bht_oracle.hpp"
#include "oracles.hpp"
#include "qlimits/bht.hpp"
#include "qlimits/bounds.hpp"
#include "qlimits/cli.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/dynamics.hpp"
#include "qlimits/experiments.hpp"
#include "qlimits/full_space.hpp"
#include "qlimits/keylength.hpp"
#include "qlimits/scenario.hpp"
#include "qlimits/schedules.hpp"

using namespace qlimits;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x5eed2024;

double hbar() { return constants().hbar; }
double years(double a) { return a * constants().julianYear; }

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

// 1. Quantum-secure key lengths of the registry scenarios through the CLI.
Outcome key_lengths() {
    const std::vector<std::pair<std::string, int>> expected{{"datacenter", 394}, {"dyson", 667}, {"cosmic", 872}};
    Outcome o{true, ""};
    for (const auto& [name, bits] : expected) {
        std::ostringstream out, err;
        const int rc = cli::run({"keylength", "--scenario", name, "--mode", "quantum", "--format", "json"}, out, err);
        int got = -1;
        if (rc == 0) got = nlohmann::json::parse(out.str()).at("quantum_bits").get<int>();
        // Oracle: ceil(log2(((W t / hbar)^2 + 1) / P_s)) in long double.
        const Scenario sc = scenario(name);
        const long double x = static_cast<long double>(sc.work) * sc.duration.seconds() / hbar();
        const int oracleBits = static_cast<int>(std::ceil(std::log2((x * x + 1.0L) / sc.successProbability)));
        o.pass = o.pass && got == bits && oracleBits == bits;
        o.detail += fmt("%s=%d(oracle %d) ", name.c_str(), got, oracleBits);
    }
    o.detail += "expected 394/667/872";
    return o;
}

// 2. Horizon mass-energy from the Planck 2018 parameters.
Outcome cosmic_budget() {
    const double e = cosmic_energy(CosmologyParams::planck2018(), CosmicForm::fromOmega);
    const double rel = std::abs(e / 4.62e69 - 1.0);
    return {rel <= 5e-3, fmt("E=%.6e J, rel dev %.3e (tol 5e-3)", e, rel)};
}

// 3. Deterministic and recoverable limits for the cosmic budget.
Outcome cosmic_limits() {
    const double w = 4.62e69, t = years(1e14);
    const int det = max_deterministic_keylength(w, t);
    const int rec = max_recoverable_keylength(w, t, 1e-12);
    return {det == 830 && rec == 871, fmt("deterministic=%d (830), recoverable=%d (871)", det, rec)};
}

// 4. Classical success probabilities for the two published anchors.
Outcome classical_anchors() {
    auto solve = [](double w, double n, double t, double T) {
        BoundQuery q;
        q.bits = n;
        q.work = w;
        q.time = t;
        q.temperature = T;
        q.unknown = Unknown::successProbability;
        return classical_bound(q).value;
    };
    const double dc = solve(1e16, 128, years(5), 300.0);
    const double ds = solve(8e43, 256, years(5e9), 2.7);
    // Oracle: W / (2^n E_L) with the ML and initialization terms dropped.
    const double ln2 = std::numbers::ln2;
    const double dcOracle = 1e16 / (std::exp2(128) * constants().kB * 300.0 * ln2);
    const double dsOracle = 8e43 / (std::exp2(256) * constants().kB * 2.7 * ln2);
    const bool pass = dc >= 0.8e-2 && dc <= 1.2e-2 && ds >= 2e-11 && ds <= 3e-11 &&
                      std::abs(dc / dcOracle - 1) < 1e-6 && std::abs(ds / dsOracle - 1) < 1e-6;
    return {pass, fmt("datacenter P_s=%.4e in [8e-3,1.2e-2]; dyson P_s=%.4e in [2e-11,3e-11]", dc, ds)};
}

// 5. Ballistic time at 6.5 uJ and the 65 MW runtime for n = 256.
Outcome quantum_speed() {
    const double tF = ballistic_deterministic_time(128, 6.5e-6);
    const double tP = quantum_time_at_power(256, 1.0, 6.5e7);
    // Oracle: P t = sqrt(2^n - 1) hbar / t  =>  t = sqrt(sqrt(2^n) hbar / P).
    const double tPOracle = std::sqrt(std::exp2(128) * hbar() / 6.5e7);
    const double tFOracle = kPi / 2 * (std::exp2(64) + 1) * hbar() / 6.5e-6;
    const bool pass = tF <= 1e-9 && tP <= 0.1 && std::abs(tP / tPOracle - 1) < 1e-9 &&
                      std::abs(tF / tFOracle - 1) < 1e-12;
    return {pass, fmt("t_F=%.4e s (<=1e-9), t(65 MW)=%.4e s (<=0.1)", tF, tP)};
}

// 6. Ballistic propagation against the closed form.
Outcome ballistic_exactness() {
    double worst = 0.0, finalMin = 1.0;
    for (int n : {8, 12}) {
        const SearchSpace s(n);
        const double omega = 3.0e3;
        const auto sched = ballistic_schedule(s, hbar() * omega * (1.0 + s.overlap()));
        const auto tr = evolve(EffectiveState::initial(s), sched, sched.total_duration() / 2000.0);
        for (const auto& p : tr.points) {
            worst = std::max(worst, std::abs(p.obs.P_s - oracle::ballistic_probability(n, omega, p.t)));
        }
        finalMin = std::min(finalMin, tr.points.back().obs.P_s);
    }
    return {worst <= 1e-9 && finalMin >= 1.0 - 1e-9,
            fmt("max |dP_s|=%.2e (tol 1e-9), min final P_s=1-%.2e", worst, 1.0 - finalMin)};
}

// 7. Two-level reduction against the full register.
Outcome reduction_oracle() {
    std::mt19937_64 rng(kSeed + 7);
    double worst = 0.0;
    for (int n : {4, 8, 10}) {
        const SearchSpace s(n);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t(1) << n) - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const auto sched = oracle::random_schedule(rng, 5, 2.0, s.sqrt_dimension());
            const double step = sched.total_duration() / 25.0;
            const auto a = evolve(EffectiveState::initial(s), sched, step);
            const auto b = full_space_reference(s, sched, step, pick(rng));
            if (a.points.size() != b.points.size()) return {false, "sample grids differ"};
            for (std::size_t k = 0; k < a.points.size(); ++k) {
                const auto& x = a.points[k].obs;
                const auto& y = b.points[k].obs;
                worst = std::max({worst, std::abs(x.P_s - y.P_s), std::abs(x.P_i - y.P_i), std::abs(x.A - y.A)});
            }
        }
    }
    // Spot check the full-register reference itself against dense diagonalization.
    const SearchSpace s(6);
    const auto sched = oracle::random_schedule(rng, 5, 2.0, s.sqrt_dimension());
    const auto full = full_space_reference(s, sched, sched.total_duration(), 17);
    const auto dense = oracle::dense_observables(oracle::dense_evolve(6, sched, 17), 17);
    const double denseDev = std::abs(full.points.back().obs.P_s - dense.P_s) + std::abs(full.points.back().obs.A - dense.A);
    return {worst <= 1e-9 && denseDev <= 1e-9,
            fmt("max dev %.2e over 300 schedules (tol 1e-9); full vs dense %.2e", worst, denseDev)};
}

// 8. Phase-pi pulse pairs reproduce textbook amplitude amplification.
Outcome grover_pulsed() {
    Outcome o{true, ""};
    for (int n : {8, 10, 12}) {
        const SearchSpace s(n);
        const int k = static_cast<int>(std::lround(kPi * std::exp2(n / 2.0) / 4.0));
        const auto fin = propagate(EffectiveState::initial(s), grover_pulsed_schedule(s, hbar() * 1e6, kPi, k));
        const double ps = std::norm(fin.solution_amplitude());
        const double need = 1.0 - std::exp2(2.0 - n);
        o.pass = o.pass && ps >= need;
        o.detail += fmt("n=%d k=%d P_s=%.6f (>=%.6f) ", n, k, ps, need);
    }
    return o;
}

// 9. Local-adiabatic runtime at fixed infidelity grows as 2^(n/2).
Outcome adiabatic_scaling() {
    std::vector<double> xs, ys;
    for (int n = 6; n <= 14; ++n) {
        const auto r = adiabatic_runtime_for_infidelity(SearchSpace(n), hbar(), 0.01, 512);
        xs.push_back(n);
        ys.push_back(std::log2(r.runtime));
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope - 0.5) <= 0.05, fmt("slope %.4f bit^-1 over n=6..14 (0.50 +- 0.05)", slope)};
}

// 10. Analytic rates against central differences; eigenenergies against dense diagonalization.
Outcome derivatives_and_spectrum() {
    std::mt19937_64 rng(kSeed + 10);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    double minOrder = 1e9;
    for (int trial = 0; trial < 50; ++trial) {
        const SearchSpace s(std::uniform_int_distribution<int>(4, 16)(rng));
        const double wi = u(rng), ws = u(rng);
        const auto start = propagate(EffectiveState::initial(s), oracle::random_schedule(rng, 3, 2.0, s.sqrt_dimension()));
        const double split = std::sqrt((wi - ws) * (wi - ws) + 4.0 * wi * ws * s.overlap_squared());
        const double t0 = 1.0 / split;
        auto ps = [&](double t) { return std::norm(propagate(start, ControlSchedule({{t, wi, ws}})).solution_amplitude()); };
        const double exact =
            analytic_rates(measure(propagate(start, ControlSchedule({{t0, wi, ws}})), wi, ws), wi, ws, s).dPs_dt;
        const double e1 = std::abs((ps(t0 * 1.2) - ps(t0 * 0.8)) / (0.4 * t0) - exact);
        const double e2 = std::abs((ps(t0 * 1.025) - ps(t0 * 0.975)) / (0.05 * t0) - exact);
        minOrder = std::min(minOrder, std::log2(e1 / e2) / 3.0);
    }
    double worstEig = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const double omega = log_uniform(rng, 1e-3, 1e3);
        const double dw = std::uniform_real_distribution<double>(-1.0, 1.0)(rng) * omega;
        const auto e = eigenenergies(SearchSpace(n), omega, dw);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::dense_hamiltonian(n, omega + dw, omega - dw, 0));
        const auto& ev = es.eigenvalues();
        const double top = ev(ev.size() - 1) * hbar(), second = ev(ev.size() - 2) * hbar();
        // The remaining 2^n - 2 levels sit at zero; the lower branch may coincide with them.
        const double lower = std::abs(second) > std::abs(ev(0) * hbar()) ? second : ev(0) * hbar();
        const double scale = std::abs(top);
        worstEig = std::max({worstEig, std::abs(e.plus - top) / scale, std::abs(e.minus - lower) / scale});
    }
    return {minOrder >= 1.9 && worstEig <= 1e-12,
            fmt("min FD order %.3f (>=1.9); eigen rel dev %.2e (<=1e-12, scaled by E_+)", minOrder, worstEig)};
}

// 11. Short-time envelope prefactor.
Outcome prefactor() {
    const auto opt = optimal_k(20);
    const double k0 = 1.0 / std::sqrt(3.0 * std::exp2(20));
    // Oracle: dense grid maximum of the prefactor formula written out here.
    auto b = [](double k, double n) {
        const double r = std::sqrt(k * k + std::exp2(-n) * (1.0 - k * k));
        return (1.0 + k) / ((1.0 + r) * (1.0 + r));
    };
    double gridK = 0.0, gridB = 0.0;
    for (int j = 0; j <= 200000; ++j) {
        const double k = 1e-2 * j / 200000.0;
        if (b(k, 20) > gridB) {
            gridB = b(k, 20);
            gridK = k;
        }
    }
    bool belowOne = true;
    for (int n = 1; n <= 64; ++n) belowOne = belowOne && optimal_k(n).b < 1.0;
    const bool pass = std::abs(opt.k / k0 - 1.0) <= 0.2 && opt.b <= 1.0 - k0 + 1e-6 && belowOne &&
                      std::abs(opt.k - gridK) <= 1e-7 && opt.b >= gridB - 1e-14;
    return {pass, fmt("k*=%.6e (ref %.6e, grid %.6e), b*=%.9f (<= %.9f), b*<1 for n=1..64: %s", opt.k, k0, gridK,
                      opt.b, 1.0 - k0 + 1e-6, belowOne ? "yes" : "no")};
}

// 12. Gate-model work over the fundamental bound.
Outcome gate_ratio() {
    const double ratio = gate_bound(200, 1.0, 1.0, 0, 0.0) / quantum_work(200, 1.0, 1.0);
    return {std::abs(ratio - kPi) <= 0.01, fmt("ratio %.10f (pi +- 0.01)", ratio)};
}

// 13. Collision search: closed-form optimum against a brute-force sweep.
Outcome bht() {
    const oracle::BhtPhysics phys{hbar(), constants().kB};
    struct Regime {
        double T, t;
    };
    double worstK = 0.0, worstW = 0.0;
    int compared = 0, clamped = 0;
    for (const Regime& r : {Regime{0.0, 1.0}, Regime{300.0, 1e-14}, Regime{2.7, 1e-12}}) {
        for (int n : {16, 24, 32, 40, 48}) {
            const double P = 1.0;
            const auto plan = bht_optimal(n, r.t, r.T, P);
            const auto sweep = oracle::bht_sweep(phys, n, r.t, r.T, P);
            if (plan.samples <= 1.0) {
                // Clamped optimum: only the work comparison is meaningful.
                ++clamped;
                worstW = std::max(worstW, std::abs(plan.work / sweep.work - 1.0));
                continue;
            }
            ++compared;
            worstK = std::max(worstK, std::abs(plan.samples / sweep.k - 1.0));
            worstW = std::max(worstW, std::abs(plan.work / sweep.work - 1.0));
        }
    }
    std::string report;
    const std::vector<std::pair<std::string, int>> reference{{"datacenter", 415}, {"dyson", 788}, {"cosmic", 1077}};
    for (const auto& [name, ref] : reference) {
        const Scenario sc = scenario(name);
        const int bits = bht_min_image_bits(sc.work, sc.duration.seconds(), sc.temperature, sc.successProbability);
        report += fmt("\n       %s: min image bits %d vs reference %d (%s, %+d)", name.c_str(), bits, ref,
                      bits == ref ? "agree" : "differ", bits - ref);
    }
    report +=
        "\n       the offset is a near-constant ~88 bits (a factor ~2^29 in W*); dropping the sampling term,"
        "\n       the Landauer term or P_s does not reproduce it. The values above minimize the full"
        "\n       three-term work expression, which the brute-force sweep confirms";
    return {compared >= 5 && worstK <= 0.05 && worstW <= 0.05,
            fmt("%d interior + %d clamped optima; max k* dev %.3e, max W dev %.3e (tol 5e-2)", compared, clamped,
                worstK, worstW) +
                report};
}

// 14. Sinusoidal detuning suppresses the averaged overlap by 1 - r^2/4.
Outcome modulated_detuning() {
    const auto m = measure_modulated_suppression(SearchSpace(16), 0.1);
    const double rel = std::abs(m.suppression / m.predicted - 1.0);
    return {rel <= 0.10, fmt("|<A>|/|A0|=%.6f vs 1-r^2/4=%.6f, rel dev %.3e (tol 0.10)", m.suppression, m.predicted, rel)};
}

// 15. Moment work floor on random 8-level spectra.
Outcome work_floor_check() {
    std::mt19937_64 rng(kSeed + 15);
    std::exponential_distribution<double> dirichlet(1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    int monotoneFailures = 0, limitFailures = 0;
    double worstLimit = 0.0;
    constexpr int kTrials = 200;
    for (int trial = 0; trial < kTrials; ++trial) {
        std::vector<double> w(8);
        std::vector<Complex> a(8);
        std::vector<double> p(8);
        double sum = 0.0;
        for (int j = 0; j < 8; ++j) {
            w[j] = log_uniform(rng, 1e-2, 1e2);
            p[j] = dirichlet(rng);
            sum += p[j];
        }
        double omegaM = 0.0;
        for (int j = 0; j < 8; ++j) {
            a[j] = std::polar(std::sqrt(p[j] / sum), phase(rng));
            omegaM = std::max(omegaM, w[j]);
        }
        double prev = 0.0;
        for (int m = 2; m <= 128; m += 2) {
            const double f = work_floor(w, a, m);
            if (f < prev * (1.0 - 1e-12)) ++monotoneFailures;
            prev = f;
        }
        const double dev = 1.0 - work_floor(w, a, 128) / (hbar() * omegaM);
        worstLimit = std::max(worstLimit, dev);
        if (dev > 0.01) ++limitFailures;
    }
    std::string detail = fmt("monotone violations %d/%d; m=128 within 1%% of hbar*omega_M in %d/%d spectra "
                             "(worst shortfall %.3f)",
                             monotoneFailures, kTrials, kTrials - limitFailures, kTrials, worstLimit);
    if (limitFailures > 0) {
        detail +=
            "\n       analysis: at m=128 the floor is hbar*omega_M*(|a_M|^2 + ...)^(1/128) >= hbar*omega_M*|a_M|^(1/64);"
            "\n       a 1% match needs |a_M|^2 >~ 0.28, which generic overlaps do not provide. Convergence is"
            "\n       only as m -> infinity (checked by work_floor_limit in the unit suite).";
    }
    return {monotoneFailures == 0 && limitFailures == 0, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"registry key lengths", key_lengths},
        {"cosmic budget", cosmic_budget},
        {"cosmic deterministic/recoverable limits", cosmic_limits},
        {"classical anchors", classical_anchors},
        {"quantum speed anchors", quantum_speed},
        {"ballistic exactness", ballistic_exactness},
        {"reduction vs full register", reduction_oracle},
        {"pulsed Grover", grover_pulsed},
        {"adiabatic scaling", adiabatic_scaling},
        {"derivatives and eigenenergies", derivatives_and_spectrum},
        {"short-time prefactor", prefactor},
        {"gate/fundamental ratio", gate_ratio},
        {"collision search optimum", bht},
        {"modulated detuning", modulated_detuning},
        {"work floor", work_floor_check},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s [%2zu] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
