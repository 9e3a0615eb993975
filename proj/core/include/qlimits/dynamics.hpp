#pragma once

#include <complex>
#include <vector>

#include "qlimits/search_space.hpp"

namespace qlimits {

using Complex = std::complex<double>;

/// State of the search register restricted to span{|i>, |s>}, written in the
/// orthonormal basis {|i>, |s_perp>} with |s> = g|i> + sqrt(1-g^2)|s_perp>.
struct EffectiveState {
    Complex c1{1.0, 0.0};  // <i|psi>
    Complex c2{0.0, 0.0};  // <s_perp|psi>
    SearchSpace space;

    static EffectiveState initial(const SearchSpace& space) { return {{1.0, 0.0}, {0.0, 0.0}, space}; }

    double norm_squared() const noexcept { return std::norm(c1) + std::norm(c2); }
    /// <s|psi>
    Complex solution_amplitude() const noexcept {
        return space.overlap() * c1 + space.complement() * c2;
    }
};

/// Constant-Hamiltonian stretch of a control schedule. Frequencies are the
/// energies hbar*omega_i and hbar*omega_s divided by hbar.
struct Segment {
    double duration = 0.0;  // s
    double omega_i = 0.0;   // rad/s
    double omega_s = 0.0;   // rad/s

    double mean_frequency() const noexcept { return 0.5 * (omega_i + omega_s); }
    double detuning() const noexcept { return 0.5 * (omega_i - omega_s); }

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-constant H_Q(t) = hbar*omega_i(t)|i><i| + hbar*omega_s(t)|s><s|.
class ControlSchedule {
public:
    ControlSchedule() = default;
    /// Throws Error{domain} for a non-positive duration, a negative or
    /// non-finite frequency.
    explicit ControlSchedule(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    bool empty() const noexcept { return segments_.empty(); }
    std::size_t size() const noexcept { return segments_.size(); }
    double total_duration() const noexcept { return total_; }

    /// Segment active at time t (the later one on a boundary).
    const Segment& at(double t) const;

    friend bool operator==(const ControlSchedule&, const ControlSchedule&) = default;

private:
    std::vector<Segment> segments_;
    double total_ = 0.0;
};

struct Observables {
    double P_s = 0.0;
    double P_i = 0.0;
    Complex A{};            // <psi|s><i|psi>
    double alpha_ab = 0.0;  // arg(A)
    double E_plus = 0.0;    // J
    double E_minus = 0.0;   // J
};

struct TracePoint {
    double t = 0.0;
    double omega_i = 0.0;
    double omega_s = 0.0;
    Observables obs;
    double normError = 0.0;
};

struct Trace {
    std::vector<TracePoint> points;
    EffectiveState final_state = EffectiveState::initial(SearchSpace(1));
    /// Set when 2^(-n) is below the normal double range; P_s(0) is then
    /// reported as 0.
    bool solutionProbabilityUnderflow = false;
};

/// Real symmetric 2x2 matrix H/hbar in the {|i>, |s_perp>} basis (rad/s).
struct Hamiltonian2 {
    double h00 = 0.0;
    double h01 = 0.0;
    double h11 = 0.0;

    double trace() const noexcept { return h00 + h11; }
};

Hamiltonian2 effective_hamiltonian(const SearchSpace& space, double omega_i, double omega_s);

struct EigenEnergies {
    double plus = 0.0;   // J
    double minus = 0.0;  // J
};

/// E_pm = hbar*omega +- hbar*sqrt(dw^2 + (omega^2 - dw^2)/2^n).
/// Throws Error{domain} if |delta_omega| > omega.
EigenEnergies eigenenergies(const SearchSpace& space, double omega, double delta_omega);

Observables measure(const EffectiveState& state, double omega_i, double omega_s);

/// Times at which evolve() samples: 0, every sampleStep, every segment
/// boundary and the final time, strictly increasing.
std::vector<double> sample_times(const ControlSchedule& schedule, double sampleStep);

/// Exact propagation: each constant segment applies the closed-form 2x2
/// matrix exponential. Throws Error{internal} if the norm drifts by more
/// than 1e-9, Error{domain} on an empty schedule or sampleStep <= 0.
Trace evolve(const EffectiveState& state, const ControlSchedule& schedule, double sampleStep);

/// Propagates without recording a trace.
EffectiveState propagate(const EffectiveState& state, const ControlSchedule& schedule);

struct Rates {
    double dPs_dt = 0.0;  // 1/s
    Complex dA_dt{};      // 1/s
};

/// Instantaneous dP_s/dt and dA/dt from the observables alone.
Rates analytic_rates(const Observables& obs, double omega_i, double omega_s, const SearchSpace& space);

/// Time average of A over a window with P_i, P_s frozen at meanPop = <P_i - P_s>
/// and P_i + P_s = 1.
Complex averaged_overlap(Complex A0, double delta_omega, double omega, double meanPop, double window,
                         const SearchSpace& space);

/// max(3.79/window - 3.79/totalTime, 0). Requires 0 < window <= totalTime.
double control_bandwidth(double totalTime, double window);
double control_bandwidth(const ControlSchedule& schedule, double window);

enum class DetuningRegime { boundary, bulk };

/// Locally optimal detuning expressed as delta_omega_o * window / 2, where
/// C = omega * window / 2. Throws Error{domain} naming the violated
/// inequality when C is outside [10, 2^(n/2)/10] or, for the bulk regime,
/// when P_i < 4C^2/2^n.
double optimal_detuning(Complex A0, double C, double meanPop, double P_i, double P_s, const SearchSpace& space,
                        DetuningRegime regime);

/// 1 - r^2/4 for 0 <= r <= 0.5.
double modulated_detuning_suppression(double r);

}  // namespace qlimits
