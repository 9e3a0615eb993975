#include "qlimits/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

// Ballistic run from |i> stopped at t_F/2: P_i ~ P_s ~ 1/2 and A ~ i/2.
EffectiveState ballistic_midpoint(const SearchSpace& space, double omega) {
    const double tHalf = std::numbers::pi * space.sqrt_dimension() / (4.0 * omega);
    return propagate(EffectiveState::initial(space), ControlSchedule({{tHalf, omega, omega}}));
}

double final_infidelity(const SearchSpace& space, double energyScale, double pacing, int segments) {
    const auto sched = adiabatic_schedule(space, energyScale, pacing, AdiabaticKind::local, segments);
    const auto st = propagate(EffectiveState::initial(space), sched);
    return 1.0 - std::norm(st.solution_amplitude());
}

}  // namespace

ModulationMeasurement measure_modulated_suppression(const SearchSpace& space, double r, double omega, int periods,
                                                    int segmentsPerPeriod) {
    if (!(omega > 0.0)) throw Error(ErrorKind::domain, "omega must be > 0", format_number(omega));
    if (periods < 1 || segmentsPerPeriod < 64) {
        throw Error(ErrorKind::domain, "modulation needs >= 1 period and >= 64 segments per period");
    }
    ModulationMeasurement m;
    m.predicted = modulated_detuning_suppression(r);

    // omega_c = omega keeps |delta_omega| <= r*omega <= omega/2, so both
    // frequencies stay non-negative.
    const double omegaC = omega;
    const double amplitude = r * omegaC;
    const double period = 2.0 * std::numbers::pi / omegaC;
    const double dt = period / segmentsPerPeriod;

    std::vector<Segment> segs;
    segs.reserve(static_cast<std::size_t>(periods * segmentsPerPeriod));
    for (int k = 0; k < periods * segmentsPerPeriod; ++k) {
        const double dw = amplitude * std::sin(omegaC * (k + 0.5) * dt);
        segs.push_back({dt, omega + dw, omega - dw});
    }
    const ControlSchedule sched(std::move(segs));

    const auto start = ballistic_midpoint(space, omega);
    const auto trace = evolve(start, sched, dt);
    m.A0 = trace.points.front().obs.A;

    // Trapezoidal time average over the sampled trace.
    Complex sum{};
    for (std::size_t k = 1; k < trace.points.size(); ++k) {
        const double h = trace.points[k].t - trace.points[k - 1].t;
        sum += 0.5 * h * (trace.points[k].obs.A + trace.points[k - 1].obs.A);
    }
    m.averagedA = sum / sched.total_duration();
    m.suppression = std::abs(m.averagedA) / std::abs(m.A0);
    return m;
}

AdiabaticRuntime adiabatic_runtime_for_infidelity(const SearchSpace& space, double energyScale,
                                                  double targetInfidelity, int segments) {
    if (!(targetInfidelity > 0.0 && targetInfidelity < 1.0)) {
        throw Error(ErrorKind::domain, "target infidelity must lie in (0, 1)", format_number(targetInfidelity));
    }
    constexpr int kGrid = 60;
    constexpr double kMaxPacing = 0.999;
    constexpr double kMinPacing = 0.01;

    std::vector<double> pacing(kGrid);
    std::vector<double> infidelity(kGrid);
    for (int j = 0; j < kGrid; ++j) {
        pacing[j] = kMaxPacing * std::pow(kMinPacing / kMaxPacing, static_cast<double>(j) / (kGrid - 1));
        infidelity[j] = final_infidelity(space, energyScale, pacing[j], segments);
    }
    // Smallest pacing is the slowest sweep. Walk toward faster sweeps while
    // every runtime so far meets the target.
    int ok = -1;
    for (int j = kGrid - 1; j >= 0; --j) {
        if (infidelity[j] <= targetInfidelity) ok = j;
        else break;
    }
    if (ok < 0) {
        throw Error(ErrorKind::range, "target infidelity not reached at the slowest pacing",
                    format_number(targetInfidelity));
    }
    double pass = pacing[ok];
    double passInf = infidelity[ok];
    if (ok > 0) {
        double fail = pacing[ok - 1];
        for (int it = 0; it < 40; ++it) {
            const double mid = std::sqrt(pass * fail);
            const double inf = final_infidelity(space, energyScale, mid, segments);
            if (inf <= targetInfidelity) {
                pass = mid;
                passInf = inf;
            } else {
                fail = mid;
            }
        }
    }
    return {local_adiabatic_runtime(space, energyScale, pass), pass, passInf};
}

PulseMaximum grover_first_maximum(const SearchSpace& space, double pulseEnergy, double pulsePhase,
                                  int maxIterations) {
    const auto pair = grover_pulsed_schedule(space, pulseEnergy, pulsePhase, 1);
    EffectiveState st = EffectiveState::initial(space);
    PulseMaximum best{0, std::norm(st.solution_amplitude())};
    for (int k = 1; k <= maxIterations; ++k) {
        st = propagate(st, pair);
        const double p = std::norm(st.solution_amplitude());
        if (p < best.P_s) return best;
        best = {k, p};
    }
    return best;
}

double fit_phase_velocity(const SearchSpace& space, double omega, double delta_omega, double window, int samples) {
    if (!(window > 0.0) || samples < 3) throw Error(ErrorKind::domain, "phase fit needs window > 0 and >= 3 samples");
    if (std::abs(delta_omega) > omega) {
        throw Error(ErrorKind::domain, "phase fit needs |delta_omega| <= omega", format_number(delta_omega));
    }
    const auto start = ballistic_midpoint(space, omega);
    const ControlSchedule sched({{window, omega + delta_omega, omega - delta_omega}});
    const auto trace = evolve(start, sched, window / (samples - 1));

    std::vector<double> t;
    std::vector<double> alpha;
    double offset = 0.0;
    double prev = trace.points.front().obs.alpha_ab;
    for (const auto& p : trace.points) {
        double a = p.obs.alpha_ab;
        const double jump = a - prev;
        if (jump > std::numbers::pi) offset -= 2.0 * std::numbers::pi;
        if (jump < -std::numbers::pi) offset += 2.0 * std::numbers::pi;
        prev = a;
        t.push_back(p.t);
        alpha.push_back(a + offset);
    }
    const double n = static_cast<double>(t.size());
    double st = 0, sa = 0, stt = 0, sta = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        st += t[k];
        sa += alpha[k];
        stt += t[k] * t[k];
        sta += t[k] * alpha[k];
    }
    return (n * sta - st * sa) / (n * stt - st * st);
}

}  // namespace qlimits
