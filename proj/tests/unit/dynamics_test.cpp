#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/dynamics.hpp"
#include "qlimits/error.hpp"
#include "qlimits/experiments.hpp"
#include "qlimits/schedules.hpp"

using namespace qlimits;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector2d eig2(const Hamiltonian2& H) {
    Eigen::Matrix2d m;
    m << H.h00, H.h01, H.h01, H.h11;
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
}

EffectiveState advance(const EffectiveState& s, double dt, double wi, double ws) {
    return propagate(s, ControlSchedule({{dt, wi, ws}}));
}

}  // namespace

TEST(EffectiveHamiltonian, ZeroFrequencies) {
    const auto H = effective_hamiltonian(SearchSpace(1), 0.0, 0.0);
    EXPECT_EQ(H.h00, 0.0);
    EXPECT_EQ(H.h01, 0.0);
    EXPECT_EQ(H.h11, 0.0);
}

TEST(EffectiveHamiltonian, EqualFrequenciesSplitByOverlap) {
    const double w = 1.7;
    const auto ev = eig2(effective_hamiltonian(SearchSpace(2), w, w));
    EXPECT_NEAR(ev(0), w * 0.5, 1e-14);
    EXPECT_NEAR(ev(1), w * 1.5, 1e-14);
}

TEST(EffectiveHamiltonian, ProjectorTrace) {
    EXPECT_NEAR(effective_hamiltonian(SearchSpace(8), 1.0, 0.0).trace(), 1.0, 1e-15);
}

TEST(Eigenenergies, ZeroDetuning) {
    const double hbar = constants().hbar;
    for (int n : {1, 5, 20, 60}) {
        const auto e = eigenenergies(SearchSpace(n), 2.0, 0.0);
        const double g = std::exp2(-n / 2.0);
        EXPECT_NEAR(e.plus / (hbar * 2.0 * (1 + g)), 1.0, 1e-14);
        EXPECT_NEAR(e.minus / (hbar * 2.0 * (1 - g)), 1.0, 1e-14);
    }
}

TEST(Eigenenergies, MatchDiagonalization) {
    const SearchSpace s(10);
    const double w = 1.0, dw = 0.5;
    const auto e = eigenenergies(s, w, dw);
    const auto ev = eig2(effective_hamiltonian(s, w + dw, w - dw));
    const double hbar = constants().hbar;
    EXPECT_NEAR(e.minus / (hbar * ev(0)), 1.0, 1e-12);
    EXPECT_NEAR(e.plus / (hbar * ev(1)), 1.0, 1e-12);
}

TEST(Eigenenergies, FullDetuningLargeN) {
    const double hbar = constants().hbar;
    const auto e = eigenenergies(SearchSpace(200), 3.0, 3.0);
    EXPECT_NEAR(e.plus, 2.0 * hbar * 3.0, 1e-15 * hbar);
    EXPECT_NEAR(e.minus, 0.0, 1e-15 * hbar);
}

TEST(Eigenenergies, RejectsOverDetuning) {
    EXPECT_THROW(eigenenergies(SearchSpace(4), 1.0, 1.5), Error);
}

TEST(Evolve, ZeroScheduleLeavesStateAlone) {
    const SearchSpace s(6);
    const auto tr = evolve(EffectiveState::initial(s), ControlSchedule({{5.0, 0.0, 0.0}}), 0.1);
    for (const auto& p : tr.points) EXPECT_NEAR(p.obs.P_s, 1.0 / 64.0, 1e-15);
}

TEST(Evolve, SamplesIncludeBoundariesAndEnd) {
    const SearchSpace s(4);
    const ControlSchedule sched({{0.3, 1.0, 0.0}, {0.25, 0.0, 1.0}, {0.7, 2.0, 2.0}});
    const auto tr = evolve(EffectiveState::initial(s), sched, 0.2);
    for (std::size_t k = 1; k < tr.points.size(); ++k) EXPECT_GT(tr.points[k].t, tr.points[k - 1].t);
    auto has = [&](double t) {
        for (const auto& p : tr.points)
            if (std::abs(p.t - t) < 1e-12) return true;
        return false;
    };
    EXPECT_TRUE(has(0.0));
    EXPECT_TRUE(has(0.3));
    EXPECT_TRUE(has(0.55));
    EXPECT_NEAR(tr.points.back().t, 1.25, 1e-14);
    for (const auto& p : tr.points) EXPECT_LE(p.normError, 1e-9);
}

TEST(Evolve, RejectsBadArguments) {
    const SearchSpace s(4);
    EXPECT_THROW(evolve(EffectiveState::initial(s), ControlSchedule(), 0.1), Error);
    EXPECT_THROW(evolve(EffectiveState::initial(s), ControlSchedule({{1.0, 1.0, 1.0}}), 0.0), Error);
    EXPECT_THROW(ControlSchedule({{-1.0, 1.0, 1.0}}), Error);
    EXPECT_THROW(ControlSchedule({{1.0, -1.0, 1.0}}), Error);
}

TEST(Evolve, MatchesDenseTwoByTwoExponential) {
    std::mt19937_64 rng(5);
    const SearchSpace s(7);
    const auto sched = oracle::random_schedule(rng, 6, 3.0, 4.0);
    const auto st = propagate(EffectiveState::initial(s), sched);
    // Independent propagation in the same basis with an eigensolver.
    Eigen::Vector2cd psi(1.0, 0.0);
    for (const auto& seg : sched.segments()) {
        const auto H = effective_hamiltonian(s, seg.omega_i, seg.omega_s);
        Eigen::MatrixXd m(2, 2);
        m << H.h00, H.h01, H.h01, H.h11;
        psi = oracle::unitary(m, seg.duration) * psi;
    }
    EXPECT_NEAR(std::abs(st.c1 - psi(0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(st.c2 - psi(1)), 0.0, 1e-12);
}

TEST(Ballistic, ClosedFormAtEverySample) {
    for (int n : {8, 12}) {
        const SearchSpace s(n);
        const double hbar = constants().hbar;
        const double omega = 1000.0;
        const auto sched = ballistic_schedule(s, hbar * omega * (1.0 + s.overlap()));
        const auto tr = evolve(EffectiveState::initial(s), sched, sched.total_duration() / 2000.0);
        double worst = 0.0;
        for (const auto& p : tr.points) {
            worst = std::max(worst, std::abs(p.obs.P_s - oracle::ballistic_probability(n, omega, p.t)));
        }
        EXPECT_LE(worst, 1e-9) << "n=" << n;
        EXPECT_GE(tr.points.back().obs.P_s, 1.0 - 1e-9);
    }
}

TEST(Ballistic, ScheduleParameters) {
    const double hbar = constants().hbar;
    const auto sched = ballistic_schedule(SearchSpace(2), hbar * 1.5);
    ASSERT_EQ(sched.size(), 1u);
    EXPECT_NEAR(sched.segments()[0].omega_i, 1.0, 1e-14);
    EXPECT_NEAR(sched.segments()[0].omega_s, 1.0, 1e-14);
    EXPECT_NEAR(sched.total_duration(), kPi, 1e-14);
}

TEST(AnalyticRates, ZeroPhaseGivesNoGain) {
    const SearchSpace s(6);
    const auto obs = measure(EffectiveState::initial(s), 1.0, 1.0);
    EXPECT_NEAR(obs.alpha_ab, 0.0, 1e-15);
    EXPECT_EQ(analytic_rates(obs, 1.0, 1.0, s).dPs_dt, 0.0);
}

TEST(AnalyticRates, BalancedPopulationsWithoutDetuning) {
    const SearchSpace s(10);
    Observables obs;
    obs.P_i = obs.P_s = 0.5;
    obs.A = Complex(0.1, 0.4);
    EXPECT_EQ(std::abs(analytic_rates(obs, 2.0, 2.0, s).dA_dt), 0.0);
}

TEST(AnalyticRates, BallisticMidpointFiniteDifference) {
    const SearchSpace s(10);
    const double omega = 1.0;
    const double tHalf = kPi * s.sqrt_dimension() / (4.0 * omega);
    const auto mid = advance(EffectiveState::initial(s), tHalf, omega, omega);
    const double h = 1e-4 / omega;
    const double pPlus = std::norm(advance(mid, h, omega, omega).solution_amplitude());
    const double pMinus = std::norm(advance(EffectiveState::initial(s), tHalf - h, omega, omega).solution_amplitude());
    const double fd = (pPlus - pMinus) / (2.0 * h);
    const double exact = analytic_rates(measure(mid, omega, omega), omega, omega, s).dPs_dt;
    EXPECT_NEAR(fd / exact, 1.0, 1e-6);
}

TEST(AnalyticRates, DetunedOverlapRateMatchesFiniteDifference) {
    std::mt19937_64 rng(9);
    const SearchSpace s(6);
    const auto start = propagate(EffectiveState::initial(s), oracle::random_schedule(rng, 4, 2.0, 3.0));
    const double wi = 1.3, ws = 0.4, h = 1e-5;
    const Complex ap = measure(advance(start, h, wi, ws), wi, ws).A;
    // Durations must be positive, so use a one-sided fourth-order stencil.
    const Complex a2 = measure(advance(start, 2 * h, wi, ws), wi, ws).A;
    const Complex a3 = measure(advance(start, 3 * h, wi, ws), wi, ws).A;
    const Complex a4 = measure(advance(start, 4 * h, wi, ws), wi, ws).A;
    const Complex a0 = measure(start, wi, ws).A;
    const Complex fd = (-25.0 * a0 + 48.0 * ap - 36.0 * a2 + 16.0 * a3 - 3.0 * a4) / (12.0 * h);
    const Complex exact = analytic_rates(measure(start, wi, ws), wi, ws, s).dA_dt;
    EXPECT_LT(std::abs(fd - exact) / std::abs(exact), 1e-6);
}

TEST(AveragedOverlap, NoDetuningNoDrive) {
    const SearchSpace s(16);
    const Complex A0(0.2, 0.3);
    EXPECT_EQ(averaged_overlap(A0, 0.0, 1.0, 0.0, 50.0, s), A0);
}

TEST(AveragedOverlap, MatchesQuadratureAtModeratePhase) {
    const SearchSpace s(16);
    const Complex A0(0.1, 0.4);
    const double window = 200.0, omega = 1.0, D = 0.2;
    const double dw = 0.3 / window;
    const Complex exact = oracle::rk4_averaged_overlap(A0, dw, omega, D, window, s.overlap(), 20000);
    const Complex got = averaged_overlap(A0, dw, omega, D, window, s);
    EXPECT_LT(std::abs(got - exact) / std::abs(exact), 1e-6);
}

TEST(AveragedOverlap, MatchesQuadratureWithoutDetuning) {
    const SearchSpace s(12);
    const Complex A0(0.05, 0.45);
    const Complex exact = oracle::rk4_averaged_overlap(A0, 0.0, 1.0, 0.3, 100.0, s.overlap(), 2000);
    EXPECT_LT(std::abs(averaged_overlap(A0, 0.0, 1.0, 0.3, 100.0, s) - exact), 1e-12);
}

TEST(AveragedOverlap, FirstTermVanishesAtFullTurn) {
    const SearchSpace s(16);
    const double window = 100.0, dw = 2.0 * kPi / window;
    const Complex with = averaged_overlap(Complex(0.3, 0.2), dw, 1.0, 0.1, window, s);
    const Complex without = averaged_overlap(Complex(0.0, 0.0), dw, 1.0, 0.1, window, s);
    EXPECT_LT(std::abs(with - without), 1e-15);
}

TEST(ControlBandwidth, Examples) {
    EXPECT_EQ(control_bandwidth(10.0, 10.0), 0.0);
    EXPECT_NEAR(control_bandwidth(10.0, 5.0), 3.79 / 10.0, 1e-15);
    const auto ballistic = ballistic_schedule(SearchSpace(10), 1e-30);
    EXPECT_EQ(control_bandwidth(ballistic, ballistic.total_duration()), 0.0);
    EXPECT_THROW(control_bandwidth(1.0, 2.0), Error);
    EXPECT_THROW(control_bandwidth(1.0, 0.0), Error);
}

TEST(OptimalDetuning, ClosedFormCases) {
    const SearchSpace s(20);
    const double g = s.overlap();
    EXPECT_DOUBLE_EQ(optimal_detuning(Complex(g, 0.0), 100.0, 1.0, 1.0, g * g, s, DetuningRegime::boundary), 0.03);
    EXPECT_DOUBLE_EQ(optimal_detuning(Complex(g, 0.45), 100.0, 0.0, 0.5, 0.5, s, DetuningRegime::bulk), 0.03);
    // Positive Re(A0 - g) lowers the optimum, negative raises it up to 4/C.
    EXPECT_LT(optimal_detuning(Complex(g + 0.01, 0.45), 100.0, 0.0, 0.5, 0.5, s, DetuningRegime::bulk), 0.03);
    EXPECT_DOUBLE_EQ(optimal_detuning(Complex(g - 0.1, 0.45), 100.0, 0.0, 0.5, 0.5, s, DetuningRegime::bulk), 0.04);
}

TEST(OptimalDetuning, PreconditionsNameTheInequality) {
    const SearchSpace s(20);
    auto message = [&](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::domain);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message([&] { optimal_detuning({}, 5.0, 0, 1, 0, s, DetuningRegime::boundary); }).find("C >= 10"),
              std::string::npos);
    EXPECT_NE(message([&] { optimal_detuning({}, 500.0, 0, 1, 0, s, DetuningRegime::boundary); })
                  .find("2^(n/2)/10"),
              std::string::npos);
    EXPECT_NE(message([&] { optimal_detuning({}, 100.0, 0, 0.01, 0.99, s, DetuningRegime::bulk); })
                  .find("4 C^2"),
              std::string::npos);
}

namespace {

// Information gained over the window for x = dw * window / 2.
double window_gain(const EffectiveState& start, double omega, double window, double x) {
    const double dw = 2.0 * x / window;
    const auto end = advance(start, window, omega + dw, omega - dw);
    return std::norm(end.solution_amplitude()) - std::norm(start.solution_amplitude());
}

struct Sweep {
    double argmax;
    double max;
};

Sweep sweep_gain(const EffectiveState& start, double omega, double window, double C) {
    Sweep best{0.0, -1.0};
    for (int k = 0; k <= 1000; ++k) {
        const double x = -8.0 / C + 16.0 / C * k / 1000.0;
        const double gain = window_gain(start, omega, window, x);
        if (gain > best.max) best = {x, gain};
    }
    return best;
}

}  // namespace

// The gain curve is flat near its optimum: the sweep maximizer sits closer to
// zero than the closed form, so the check is on achieved gain and on the 4/C
// ceiling rather than on the location of the argmax.
TEST(OptimalDetuning, BoundarySweepOracle) {
    const SearchSpace s(20);
    const double omega = 1.0, C = 100.0, window = 2.0 * C / omega;
    const auto start = EffectiveState::initial(s);
    const auto sweep = sweep_gain(start, omega, window, C);
    const double x = optimal_detuning(Complex(s.overlap(), 0.0), C, 1.0, 1.0, s.overlap_squared(), s,
                                      DetuningRegime::boundary);
    EXPECT_LE(sweep.argmax, 4.0 / C);
    EXPECT_LE(x, 4.0 / C);
    EXPECT_GE(window_gain(start, omega, window, x), 0.99 * sweep.max);
    RecordProperty("sweep_argmax", std::to_string(sweep.argmax));
}

TEST(OptimalDetuning, BulkSweepOracle) {
    const SearchSpace s(20);
    const double omega = 1.0, C = 100.0, window = 2.0 * C / omega;
    const auto start = advance(EffectiveState::initial(s), kPi * s.sqrt_dimension() / (4.0 * omega), omega, omega);
    const auto obs = measure(start, omega, omega);
    const auto sweep = sweep_gain(start, omega, window, C);
    const double x = optimal_detuning(obs.A, C, obs.P_i - obs.P_s, obs.P_i, obs.P_s, s, DetuningRegime::bulk);
    EXPECT_LE(sweep.argmax, 4.0 / C);
    EXPECT_LE(x, 4.0 / C);
    EXPECT_GE(window_gain(start, omega, window, x), 0.99 * sweep.max);
    RecordProperty("sweep_argmax", std::to_string(sweep.argmax));
}

TEST(ModulatedDetuning, ClosedForm) {
    EXPECT_EQ(modulated_detuning_suppression(0.0), 1.0);
    EXPECT_DOUBLE_EQ(modulated_detuning_suppression(0.1), 0.9975);
    EXPECT_THROW(modulated_detuning_suppression(0.6), Error);
    EXPECT_THROW(modulated_detuning_suppression(-0.1), Error);
}

TEST(ModulatedDetuning, SimulatedSuppression) {
    const auto m = measure_modulated_suppression(SearchSpace(16), 0.1);
    EXPECT_NEAR(m.suppression / m.predicted, 1.0, 0.10);
    const auto flat = measure_modulated_suppression(SearchSpace(16), 0.0);
    EXPECT_GT(flat.suppression, m.suppression);
}

TEST(PhaseVelocity, ProportionalToDetuning) {
    const SearchSpace s(16);
    std::vector<double> coeff;
    for (double dw : {0.02, 0.04, 0.08}) {
        const double slope = fit_phase_velocity(s, 1.0, dw, 0.5 / dw);
        coeff.push_back(slope / dw);
    }
    for (double c : coeff) EXPECT_NEAR(c / coeff[0], 1.0, 0.05);
    const double opposite = fit_phase_velocity(s, 1.0, -0.04, 0.5 / 0.04);
    EXPECT_NEAR(opposite / -0.04, coeff[1], 0.05 * std::abs(coeff[1]));
    RecordProperty("dalpha_dt_over_dw", std::to_string(coeff[0]));
}
