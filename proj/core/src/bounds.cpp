#include "qlimits/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/log2math.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

using log2math::kNegInf;

constexpr double kPi = std::numbers::pi;
constexpr double kMaxBits = 4096.0;

double hbar() { return constants().hbar; }

double log2_or_neginf(double x) { return x > 0.0 ? std::log2(x) : kNegInf; }

double require(const std::optional<double>& v, const char* name) {
    if (!v) throw Error(ErrorKind::domain, std::string("missing input: ") + name, name);
    return *v;
}

BoundResult make_result(BoundKind kind, const BoundQuery& q, double value, std::string tag) {
    BoundResult r;
    r.value = value;
    r.kind = kind;
    r.formulaTag = std::move(tag);
    r.inputs = q;
    switch (q.unknown) {
        case Unknown::work: r.unit = "J"; break;
        case Unknown::time: r.unit = "s"; break;
        case Unknown::successProbability: r.unit = "1"; break;
        case Unknown::bits: r.unit = "bit"; break;
    }
    return r;
}

// Bisection for the root of an increasing function on [lo, hi].
template <class F>
double bisect_increasing(F f, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// log2(2^a - 2^b) for a > b.
double log2_sub(double a, double b) {
    if (b == kNegInf) return a;
    return a + std::log2(-std::expm1((b - a) * std::numbers::ln2));
}

double cap_probability(double log2p, bool& saturated) {
    if (log2p > 0.0) {
        saturated = true;
        return 1.0;
    }
    return std::exp2(log2p);
}

constexpr const char* kClassicalTag = "classical: E_c = 2^n P_s (k_B T ln2 + h/4t) + 2n k_B T ln2";
constexpr const char* kQuantumTag =
    "quantum: W t >= sqrt(2^n P_s - 1) hbar; offset regime at P_s = 2^-n (the 2^(-n/2) variant is read as a typo)";
constexpr const char* kGateTag = "gate: (2n+K) E_L + hbar (sqrt(P_s 2^n) - 1)(pi - 2^(1-n/2)) / t";
constexpr const char* kBallisticTag = "ballistic: P_s = 2^-n + (1 - 2^-n) sin^2(W t / ((sqrt(2^n) + 1) hbar))";

}  // namespace

std::string_view to_string(Unknown u) {
    switch (u) {
        case Unknown::work: return "work";
        case Unknown::time: return "time";
        case Unknown::successProbability: return "psuccess";
        case Unknown::bits: return "n";
    }
    return "?";
}

std::string_view to_string(BoundKind k) {
    switch (k) {
        case BoundKind::classical: return "classical";
        case BoundKind::quantum: return "quantum";
        case BoundKind::gate: return "gate";
        case BoundKind::ballistic: return "ballistic";
        case BoundKind::bht: return "bht";
    }
    return "?";
}

Unknown parse_unknown(std::string_view text) {
    if (text == "work") return Unknown::work;
    if (text == "time") return Unknown::time;
    if (text == "psuccess") return Unknown::successProbability;
    if (text == "n") return Unknown::bits;
    throw Error(ErrorKind::parse, "unknown must be one of work, time, psuccess, n", std::string(text));
}

void BoundQuery::validate() const {
    auto positive = [](const std::optional<double>& v, const char* name) {
        if (v && !(std::isfinite(*v) && *v > 0.0)) {
            throw Error(ErrorKind::domain, std::string(name) + " must be finite and > 0", name, *v);
        }
    };
    if (bits && !(std::isfinite(*bits) && *bits >= 0.0)) {
        throw Error(ErrorKind::domain, "n must be finite and >= 0", "n", *bits);
    }
    positive(work, "work");
    positive(time, "time");
    if (temperature && !(std::isfinite(*temperature) && *temperature >= 0.0)) {
        throw Error(ErrorKind::domain, "temperature must be finite and >= 0", "temperature", *temperature);
    }
    if (successProbability && !(*successProbability >= 0.0 && *successProbability <= 1.0)) {
        throw Error(ErrorKind::domain, "psuccess must lie in [0, 1]", "psuccess", *successProbability);
    }
    if (correctedErrors && *correctedErrors < 0) {
        throw Error(ErrorKind::domain, "corrected errors must be >= 0", "corrected-errors",
                    static_cast<double>(*correctedErrors));
    }
}

double landauer_energy(double temperature) {
    if (!(temperature >= 0.0)) throw Error(ErrorKind::domain, "temperature must be >= 0", "temperature", temperature);
    return constants().kB * temperature * std::numbers::ln2;
}

double margolus_levitin_energy(double orthogonalizationTime) {
    if (!(orthogonalizationTime > 0.0)) {
        throw Error(ErrorKind::domain, "time must be > 0", "time", orthogonalizationTime);
    }
    return constants().h / (4.0 * orthogonalizationTime);
}

double log2_classical_work(double bits, double successProbability, double time, double temperature) {
    const double el = landauer_energy(temperature);
    const double perTrial = el + margolus_levitin_energy(time);
    const double search = bits + log2_or_neginf(successProbability) + std::log2(perTrial);
    return log2math::add(search, log2_or_neginf(2.0 * bits * el));
}

double classical_work(double bits, double successProbability, double time, double temperature) {
    if (bits <= 1000.0) {
        const double el = landauer_energy(temperature);
        return std::exp2(bits) * successProbability * (el + margolus_levitin_energy(time)) + 2.0 * bits * el;
    }
    return std::exp2(log2_classical_work(bits, successProbability, time, temperature));
}

BoundResult classical_bound(const BoundQuery& q) {
    q.validate();
    const double T = require(q.temperature, "temperature");
    const double el = landauer_energy(T);
    switch (q.unknown) {
        case Unknown::work: {
            const double n = require(q.bits, "n");
            const double w = classical_work(n, require(q.successProbability, "psuccess"), require(q.time, "time"), T);
            return make_result(BoundKind::classical, q, w, kClassicalTag);
        }
        case Unknown::successProbability: {
            const double n = require(q.bits, "n");
            const double w = require(q.work, "work");
            const double t = require(q.time, "time");
            const double floorWork = 2.0 * n * el;
            if (w < floorWork) {
                throw Error(ErrorKind::infeasible, "work is below the 2n E_L initialization floor", "work", floorWork);
            }
            const double log2p =
                log2_sub(std::log2(w), log2_or_neginf(floorWork)) - n - std::log2(el + margolus_levitin_energy(t));
            auto r = make_result(BoundKind::classical, q, 0.0, kClassicalTag);
            r.value = cap_probability(log2p, r.saturated);
            return r;
        }
        case Unknown::time: {
            const double n = require(q.bits, "n");
            const double p = require(q.successProbability, "psuccess");
            const double lw = std::log2(require(q.work, "work"));
            const double lp = log2_or_neginf(p);
            const double lStatic = log2math::add(n + lp + log2_or_neginf(el), log2_or_neginf(2.0 * n * el));
            if (lStatic >= lw) {
                throw Error(ErrorKind::infeasible, "work does not cover the Landauer terms at any runtime", "work",
                            std::exp2(lStatic));
            }
            const double t = std::exp2(n + lp + std::log2(constants().h / 4.0) - log2_sub(lw, lStatic));
            return make_result(BoundKind::classical, q, t, kClassicalTag);
        }
        case Unknown::bits: {
            const double lw = std::log2(require(q.work, "work"));
            const double p = require(q.successProbability, "psuccess");
            const double t = require(q.time, "time");
            auto f = [&](double n) { return log2_classical_work(n, p, t, T) - lw; };
            if (f(1.0) > 0.0) {
                throw Error(ErrorKind::infeasible, "work is below the requirement for n = 1", "work",
                            classical_work(1.0, p, t, T));
            }
            if (f(kMaxBits) < 0.0) throw Error(ErrorKind::range, "solution exceeds 4096 bits", "work");
            return make_result(BoundKind::classical, q, bisect_increasing(f, 1.0, kMaxBits), kClassicalTag);
        }
    }
    throw Error(ErrorKind::internal, "unhandled unknown");
}

double log2_quantum_work(double bits, double successProbability, double time) {
    const double radicand = log2math::pow2_minus_one(bits + log2_or_neginf(successProbability));
    if (radicand == kNegInf) return kNegInf;
    return 0.5 * radicand + std::log2(hbar() / time);
}

double quantum_work(double bits, double successProbability, double time) {
    return std::exp2(log2_quantum_work(bits, successProbability, time));
}

BoundResult quantum_bound(const BoundQuery& q) {
    q.validate();
    switch (q.unknown) {
        case Unknown::work:
        case Unknown::time: {
            const double n = require(q.bits, "n");
            const double p = require(q.successProbability, "psuccess");
            const double other = q.unknown == Unknown::work ? require(q.time, "time") : require(q.work, "work");
            // W t is symmetric, so the same expression yields either unknown.
            const double lv = log2_quantum_work(n, p, other);
            auto r = make_result(BoundKind::quantum, q, 0.0, kQuantumTag);
            if (lv == kNegInf) r.offsetRegime = true;
            else r.value = std::exp2(lv);
            return r;
        }
        case Unknown::successProbability: {
            const double n = require(q.bits, "n");
            const double x = std::log2(require(q.work, "work") * require(q.time, "time") / hbar());
            auto r = make_result(BoundKind::quantum, q, 0.0, kQuantumTag);
            r.value = cap_probability(log2math::pow2_plus_one(2.0 * x) - n, r.saturated);
            return r;
        }
        case Unknown::bits: {
            const double x = std::log2(require(q.work, "work") * require(q.time, "time") / hbar());
            const double p = require(q.successProbability, "psuccess");
            if (!(p > 0.0)) throw Error(ErrorKind::domain, "psuccess must be > 0 when solving for n", "psuccess", p);
            return make_result(BoundKind::quantum, q, log2math::pow2_plus_one(2.0 * x) - std::log2(p), kQuantumTag);
        }
    }
    throw Error(ErrorKind::internal, "unhandled unknown");
}

double quantum_time_at_power(double bits, double successProbability, double power) {
    if (!(power > 0.0)) throw Error(ErrorKind::domain, "power must be > 0", "power", power);
    const double radicand = log2math::pow2_minus_one(bits + log2_or_neginf(successProbability));
    if (radicand == kNegInf) return 0.0;
    // P t = sqrt(R) hbar / t
    return std::exp2(0.5 * (0.5 * radicand + std::log2(hbar()) - std::log2(power)));
}

double classical_time_at_power(double bits, double successProbability, double power, double temperature) {
    if (!(power > 0.0)) throw Error(ErrorKind::domain, "power must be > 0", "power", power);
    const double el = landauer_energy(temperature);
    const double trials = std::exp2(bits) * successProbability;
    // P t^2 - (trials E_L + 2n E_L) t - trials h/4 = 0
    const double b = trials * el + 2.0 * bits * el;
    const double c = trials * constants().h / 4.0;
    const double t = (b + std::sqrt(b * b + 4.0 * power * c)) / (2.0 * power);
    if (!std::isfinite(t)) throw Error(ErrorKind::range, "runtime overflows a double", "n", bits);
    return t;
}

double gate_bound(double bits, double successProbability, double time, long long correctedErrors,
                  double temperature) {
    if (!(time > 0.0)) throw Error(ErrorKind::domain, "time must be > 0", "time", time);
    if (!(successProbability > 0.0 && successProbability <= 1.0)) {
        throw Error(ErrorKind::domain, "psuccess must lie in (0, 1]", "psuccess", successProbability);
    }
    if (correctedErrors < 0) {
        throw Error(ErrorKind::domain, "corrected errors must be >= 0", "corrected-errors",
                    static_cast<double>(correctedErrors));
    }
    const double irreversible = (2.0 * bits + static_cast<double>(correctedErrors)) * landauer_energy(temperature);
    const double amplitude = std::exp2(0.5 * (bits + std::log2(successProbability)));
    const double dynamic = hbar() * (amplitude - 1.0) * (kPi - std::exp2(1.0 - bits / 2.0)) / time;
    return irreversible + std::max(dynamic, 0.0);
}

BoundResult gate_bound(const BoundQuery& q) {
    q.validate();
    if (q.unknown != Unknown::work) {
        throw Error(ErrorKind::domain, "the gate bound solves for work only", std::string(to_string(q.unknown)));
    }
    const double w = gate_bound(require(q.bits, "n"), require(q.successProbability, "psuccess"),
                                require(q.time, "time"), q.correctedErrors.value_or(0), q.temperature.value_or(0.0));
    return make_result(BoundKind::gate, q, w, kGateTag);
}

double ballistic_deterministic_time(double bits, double work) {
    if (!(work > 0.0)) throw Error(ErrorKind::domain, "work must be > 0", "work", work);
    return 0.5 * kPi * (std::exp2(bits / 2.0) + 1.0) * hbar() / work;
}

double ballistic_success(double bits, double work, double time) {
    if (!(time >= 0.0)) throw Error(ErrorKind::domain, "time must be >= 0", "time", time);
    const double tF = ballistic_deterministic_time(bits, work);
    if (time > tF * (1.0 + 1e-12)) {
        throw Error(ErrorKind::range, "time exceeds the deterministic time t_F", "time", tF);
    }
    const double inv = std::exp2(-bits);
    const double s = std::sin(work * time / ((std::exp2(bits / 2.0) + 1.0) * hbar()));
    return inv + (1.0 - inv) * s * s;
}

BoundResult ballistic_bound(const BoundQuery& q) {
    q.validate();
    // Rotation angle theta = W t / ((sqrt(2^n)+1) hbar) needed for P_s.
    auto angle_for = [](double n, double p) {
        const double inv = std::exp2(-n);
        const double s2 = std::clamp((p - inv) / (1.0 - inv), 0.0, 1.0);
        return std::asin(std::sqrt(s2));
    };
    switch (q.unknown) {
        case Unknown::successProbability: {
            const double v = ballistic_success(require(q.bits, "n"), require(q.work, "work"), require(q.time, "time"));
            return make_result(BoundKind::ballistic, q, v, kBallisticTag);
        }
        case Unknown::time:
        case Unknown::work: {
            const double n = require(q.bits, "n");
            const double p = require(q.successProbability, "psuccess");
            const double other = q.unknown == Unknown::time ? require(q.work, "work") : require(q.time, "time");
            const double v = angle_for(n, p) * (std::exp2(n / 2.0) + 1.0) * hbar() / other;
            return make_result(BoundKind::ballistic, q, v, kBallisticTag);
        }
        case Unknown::bits: {
            const double w = require(q.work, "work");
            const double t = require(q.time, "time");
            const double p = require(q.successProbability, "psuccess");
            auto reach = [&](double n) {
                const double theta = std::min(w * t / ((std::exp2(n / 2.0) + 1.0) * hbar()), kPi / 2.0);
                const double inv = std::exp2(-n);
                return inv + (1.0 - inv) * std::sin(theta) * std::sin(theta);
            };
            // reach(n) decreases in n; find the largest n with reach(n) >= p.
            auto f = [&](double n) { return p - reach(n); };
            if (f(0.0) > 0.0) throw Error(ErrorKind::infeasible, "psuccess unreachable even for n = 0", "psuccess", p);
            if (f(kMaxBits) <= 0.0) throw Error(ErrorKind::range, "solution exceeds 4096 bits", "work");
            return make_result(BoundKind::ballistic, q, bisect_increasing(f, 0.0, kMaxBits), kBallisticTag);
        }
    }
    throw Error(ErrorKind::internal, "unhandled unknown");
}

BoundResult solve_bound(BoundKind kind, const BoundQuery& query) {
    switch (kind) {
        case BoundKind::classical: return classical_bound(query);
        case BoundKind::quantum: return quantum_bound(query);
        case BoundKind::gate: return gate_bound(query);
        case BoundKind::ballistic: return ballistic_bound(query);
        case BoundKind::bht: break;
    }
    throw Error(ErrorKind::usage, "bht is not a closed-form bound; use the bht solver", "bht");
}

double prefactor_b(double k, double bits) {
    if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorKind::domain, "k must lie in [0, 1]", "k", k);
    const double root = std::sqrt(k * k + std::exp2(-bits) * (1.0 - k * k));
    return (1.0 + k) / ((1.0 + root) * (1.0 + root));
}

PrefactorOptimum optimal_k(double bits, double tolerance) {
    double lo = 0.0;
    double hi = std::max(1e-2, std::min(1.0, 10.0 / std::sqrt(3.0 * std::exp2(bits))));
    const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invPhi * (hi - lo);
    double x2 = lo + invPhi * (hi - lo);
    double f1 = prefactor_b(x1, bits);
    double f2 = prefactor_b(x2, bits);
    while (hi - lo > tolerance) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invPhi * (hi - lo);
            f2 = prefactor_b(x2, bits);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invPhi * (hi - lo);
            f1 = prefactor_b(x1, bits);
        }
    }
    const double k = 0.5 * (lo + hi);
    return {k, prefactor_b(k, bits)};
}

namespace {

void check_overlaps(std::span<const double> spectrum, std::span<const Complex> overlaps) {
    if (spectrum.size() != overlaps.size() || spectrum.empty()) {
        throw Error(ErrorKind::domain, "spectrum and overlaps must be non-empty and of equal length", "overlaps");
    }
    double norm = 0.0;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        if (!std::isfinite(spectrum[j])) throw Error(ErrorKind::domain, "spectrum must be finite", "spectrum");
        norm += std::norm(overlaps[j]);
    }
    if (norm == 0.0) throw Error(ErrorKind::domain, "all overlaps are zero", "overlaps");
    if (std::abs(norm - 1.0) > 1e-9) throw Error(ErrorKind::domain, "overlaps are not normalized", "overlaps", norm);
}

}  // namespace

double work_floor(std::span<const double> spectrum, std::span<const Complex> overlaps, int m) {
    if (m <= 0 || m % 2 != 0) {
        throw Error(ErrorKind::domain, "m must be a positive even integer", "m", static_cast<double>(m));
    }
    check_overlaps(spectrum, overlaps);
    // log sum_j exp(log|a_j|^2 + m log|omega_j|)
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const double w = std::norm(overlaps[j]);
        if (w > 0.0 && spectrum[j] != 0.0) peak = std::max(peak, std::log(w) + m * std::log(std::abs(spectrum[j])));
    }
    if (peak == -std::numeric_limits<double>::infinity()) return 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const double w = std::norm(overlaps[j]);
        if (w > 0.0 && spectrum[j] != 0.0) sum += std::exp(std::log(w) + m * std::log(std::abs(spectrum[j])) - peak);
    }
    return hbar() * std::exp((peak + std::log(sum)) / m);
}

double work_floor_limit(std::span<const double> spectrum, std::span<const Complex> overlaps) {
    check_overlaps(spectrum, overlaps);
    double top = 0.0;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        if (std::norm(overlaps[j]) > 0.0) top = std::max(top, std::abs(spectrum[j]));
    }
    return hbar() * top;
}

double init_readout_work(double bits, double temperature, InitMode mode) {
    const double factor = mode == InitMode::generic ? 2.0 : 4.0;
    return factor * bits * landauer_energy(temperature);
}

double battery_relative_uncertainty(double degreesOfFreedom, double temperature, double potentialEnergy) {
    if (!(degreesOfFreedom >= 1.0)) {
        throw Error(ErrorKind::domain, "degrees of freedom must be >= 1", "dof", degreesOfFreedom);
    }
    if (!(temperature > 0.0)) throw Error(ErrorKind::domain, "temperature must be > 0", "temperature", temperature);
    if (!(potentialEnergy >= 0.0)) {
        throw Error(ErrorKind::domain, "potential energy must be >= 0", "potential", potentialEnergy);
    }
    const double kT = constants().kB * temperature;
    const double mean = potentialEnergy + degreesOfFreedom * kT / 2.0;
    return std::sqrt(degreesOfFreedom / 2.0) * kT / mean;
}

}  // namespace qlimits
