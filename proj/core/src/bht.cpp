#include "qlimits/bht.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlimits/bounds.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/log2math.hpp"

namespace qlimits {

namespace {

using log2math::kNegInf;

void check_inputs(double totalTime, double temperature, double successProbability) {
    if (!(totalTime > 0.0)) throw Error(ErrorKind::domain, "total time must be > 0", "time", totalTime);
    if (!(temperature >= 0.0)) throw Error(ErrorKind::domain, "temperature must be >= 0", "temperature", temperature);
    if (!(successProbability > 0.0 && successProbability <= 1.0)) {
        throw Error(ErrorKind::domain, "psuccess must lie in (0, 1]", "psuccess", successProbability);
    }
}

// log2 of D = 2 (n+1) E_L t / hbar + pi.
double log2_d(double imageBits, double totalTime, double temperature) {
    return std::log2(2.0 * (imageBits + 1.0) * landauer_energy(temperature) * totalTime / constants().hbar +
                     std::numbers::pi);
}

}  // namespace

double log2_bht_work(double imageBits, double samples, double totalTime, double temperature,
                     double successProbability) {
    check_inputs(totalTime, temperature, successProbability);
    const double log2Space = imageBits + std::log2(successProbability);
    if (!(samples >= 1.0) || std::log2(samples) > log2Space * (1.0 + 1e-12) + 1e-12) {
        throw Error(ErrorKind::domain, "samples must lie in [1, 2^n P_s]", "samples", samples);
    }
    const double lk = std::log2(samples);
    const double el = landauer_energy(temperature);
    const double classical = lk + std::log2((imageBits + 1.0) * el + margolus_levitin_energy(totalTime));
    const double radicand = log2math::pow2_minus_one(log2Space - lk);
    const double quantum = radicand == kNegInf ? kNegInf : 0.5 * radicand + std::log2(constants().hbar / totalTime);
    return log2math::add(classical, quantum);
}

double bht_work(double imageBits, double samples, double totalTime, double temperature, double successProbability) {
    return std::exp2(log2_bht_work(imageBits, samples, totalTime, temperature, successProbability));
}

double bht_quantum_time(double imageBits, double samples, double totalTime, double successProbability) {
    const double radicand = log2math::pow2_minus_one(imageBits + std::log2(successProbability) - std::log2(samples));
    if (radicand == kNegInf) return 0.0;
    const double ratio = samples * 2.0 * std::numbers::pi / (4.0 * std::exp2(0.5 * radicand));
    return totalTime / (ratio + 1.0);
}

double log2_bht_min_work(double imageBits, double totalTime, double temperature, double successProbability) {
    check_inputs(totalTime, temperature, successProbability);
    return std::log2(1.5) +
           (imageBits + std::log2(successProbability) + log2_d(imageBits, totalTime, temperature)) / 3.0 +
           std::log2(constants().hbar / totalTime);
}

BhtPlan bht_optimal(double imageBits, double totalTime, double temperature, double successProbability) {
    check_inputs(totalTime, temperature, successProbability);
    const double log2Space = imageBits + std::log2(successProbability);
    if (log2Space < 0.0) throw Error(ErrorKind::domain, "2^n P_s must be >= 1", "n", imageBits);

    BhtPlan plan;
    plan.imageBits = imageBits;
    plan.totalTime = totalTime;
    plan.log2Samples =
        std::clamp(log2Space / 3.0 - 2.0 * log2_d(imageBits, totalTime, temperature) / 3.0, 0.0, log2Space);
    plan.samples = std::exp2(plan.log2Samples);
    plan.quantumTime = bht_quantum_time(imageBits, plan.samples, totalTime, successProbability);
    plan.log2Work = log2_bht_work(imageBits, plan.samples, totalTime, temperature, successProbability);
    plan.work = std::exp2(plan.log2Work);
    plan.log2ClosedFormWork = log2_bht_min_work(imageBits, totalTime, temperature, successProbability);
    plan.closedFormWork = std::exp2(plan.log2ClosedFormWork);

    plan.roundedSamples = plan.samples;
    plan.roundedWork = plan.work;
    if (plan.log2Samples < 52.0) {
        const double maxK = std::floor(std::exp2(log2Space) * (1.0 + 1e-12));
        double bestW = INFINITY;
        for (double k : {std::floor(plan.samples), std::ceil(plan.samples)}) {
            k = std::clamp(k, 1.0, std::max(1.0, maxK));
            const double w = bht_work(imageBits, k, totalTime, temperature, successProbability);
            if (w < bestW) {
                bestW = w;
                plan.roundedSamples = k;
            }
        }
        plan.roundedWork = bestW;
    }
    return plan;
}

int bht_min_image_bits(double workBudget, double totalTime, double temperature, double successProbability) {
    if (!(workBudget > 0.0)) throw Error(ErrorKind::domain, "work budget must be > 0", "work", workBudget);
    const double lw = std::log2(workBudget);
    auto f = [&](double n) { return log2_bht_min_work(n, totalTime, temperature, successProbability) - lw; };
    double lo = 1.0;
    double hi = 4096.0;
    if (f(lo) >= 0.0) return 1;
    if (f(hi) < 0.0) throw Error(ErrorKind::range, "image size exceeds 4096 bits", "work", workBudget);
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return static_cast<int>(log2math::snap_ceil(0.5 * (lo + hi)));
}

}  // namespace qlimits
