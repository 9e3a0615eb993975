#include "qlimits/dynamics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "qlimits/constants.hpp"
#include "qlimits/error.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kSincSeriesCutoff = 1e-4;

// exp(-i H dt) for H/hbar = a*I + bz*sz + bx*sx, with
//   a  = (w_i + w_s)/2
//   bz = (w_i - w_s)/2 + w_s g^2
//   bx = w_s g sqrt(1 - g^2)
// bz is formed from the detuning directly so that the 2^-n term is not lost
// in a difference of nearly equal diagonal entries.
struct Propagator {
    Complex u00, u01, u11;

    Propagator(const SearchSpace& space, double omega_i, double omega_s, double dt) {
        const double g = space.overlap();
        const double a = 0.5 * (omega_i + omega_s);
        const double bz = 0.5 * (omega_i - omega_s) + omega_s * space.overlap_squared();
        const double bx = omega_s * g * space.complement();
        const double r = std::hypot(bx, bz);
        const double theta = r * dt;
        const double c = std::cos(theta);
        const double s_over_r = r > 0.0 ? std::sin(theta) / r : dt;
        const Complex phase = std::polar(1.0, -a * dt);
        u00 = phase * Complex(c, -s_over_r * bz);
        u11 = phase * Complex(c, s_over_r * bz);
        u01 = phase * Complex(0.0, -s_over_r * bx);
    }

    void apply(EffectiveState& st) const {
        const Complex c1 = u00 * st.c1 + u01 * st.c2;
        const Complex c2 = u01 * st.c1 + u11 * st.c2;
        st.c1 = c1;
        st.c2 = c2;
    }
};

void check_norm(const EffectiveState& st, double t) {
    const double err = std::abs(st.norm_squared() - 1.0);
    if (err > kNormTolerance) {
        throw Error(ErrorKind::internal, "norm drift " + format_number(err) + " exceeds 1e-9 at t=" + format_number(t),
                    format_number(t));
    }
}

// sin(x)/x
double sinc(double x) {
    if (std::abs(x) < kSincSeriesCutoff) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

ControlSchedule::ControlSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& s = segments_[i];
        const std::string where = "segment " + std::to_string(i);
        if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
            throw Error(ErrorKind::domain, where + ": duration must be > 0", format_number(s.duration));
        }
        if (!(s.omega_i >= 0.0) || !std::isfinite(s.omega_i)) {
            throw Error(ErrorKind::domain, where + ": omega_i must be finite and >= 0", format_number(s.omega_i));
        }
        if (!(s.omega_s >= 0.0) || !std::isfinite(s.omega_s)) {
            throw Error(ErrorKind::domain, where + ": omega_s must be finite and >= 0", format_number(s.omega_s));
        }
        total_ += s.duration;
    }
}

const Segment& ControlSchedule::at(double t) const {
    if (segments_.empty()) throw Error(ErrorKind::domain, "empty schedule");
    double edge = 0.0;
    for (const auto& s : segments_) {
        edge += s.duration;
        if (t < edge) return s;
    }
    return segments_.back();
}

Hamiltonian2 effective_hamiltonian(const SearchSpace& space, double omega_i, double omega_s) {
    if (!(omega_i >= 0.0) || !(omega_s >= 0.0) || !std::isfinite(omega_i) || !std::isfinite(omega_s)) {
        throw Error(ErrorKind::domain, "frequencies must be finite and >= 0");
    }
    const double g = space.overlap();
    const double q = space.complement();
    return {omega_i + omega_s * space.overlap_squared(), omega_s * g * q, omega_s * q * q};
}

EigenEnergies eigenenergies(const SearchSpace& space, double omega, double delta_omega) {
    if (std::abs(delta_omega) > omega) {
        throw Error(ErrorKind::domain, "eigenenergies need |delta_omega| <= omega", format_number(delta_omega));
    }
    const double radicand =
        delta_omega * delta_omega + (omega - delta_omega) * (omega + delta_omega) * space.overlap_squared();
    const double split = std::sqrt(radicand);
    const double hbar = constants().hbar;
    return {hbar * (omega + split), hbar * (omega - split)};
}

Observables measure(const EffectiveState& state, double omega_i, double omega_s) {
    Observables o;
    const Complex s = state.solution_amplitude();
    o.P_s = std::norm(s);
    o.P_i = std::norm(state.c1);
    o.A = std::conj(s) * state.c1;
    o.alpha_ab = std::arg(o.A);
    const auto e = eigenenergies(state.space, 0.5 * (omega_i + omega_s), 0.5 * (omega_i - omega_s));
    o.E_plus = e.plus;
    o.E_minus = e.minus;
    return o;
}

std::vector<double> sample_times(const ControlSchedule& schedule, double sampleStep) {
    if (schedule.empty()) throw Error(ErrorKind::domain, "schedule is empty");
    if (!(sampleStep > 0.0)) throw Error(ErrorKind::domain, "sampleStep must be > 0", format_number(sampleStep));

    const double total = schedule.total_duration();
    const double tol = 1e-12 * total;

    std::vector<double> boundaries{0.0};
    double edge = 0.0;
    for (const auto& s : schedule.segments()) {
        edge += s.duration;
        boundaries.push_back(edge);
    }
    boundaries.back() = total;

    std::vector<double> out;
    const auto steps = static_cast<long long>(std::floor(total / sampleStep));
    out.reserve(static_cast<std::size_t>(steps) + boundaries.size() + 1);

    std::size_t b = 0;
    for (long long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * sampleStep;
        while (b < boundaries.size() && boundaries[b] <= t + tol) {
            if (out.empty() || boundaries[b] > out.back() + tol) out.push_back(boundaries[b]);
            ++b;
        }
        if (t < total - tol && (out.empty() || t > out.back() + tol)) out.push_back(t);
    }
    for (; b < boundaries.size(); ++b) {
        if (boundaries[b] > out.back() + tol) out.push_back(boundaries[b]);
    }
    return out;
}

Trace evolve(const EffectiveState& state, const ControlSchedule& schedule, double sampleStep) {
    const auto times = sample_times(schedule, sampleStep);
    const auto& segs = schedule.segments();
    const auto& space = state.space;

    Trace trace;
    trace.solutionProbabilityUnderflow = space.overlap_underflows();
    trace.points.reserve(times.size());

    auto record = [&](const EffectiveState& st, double t, const Segment& seg) {
        TracePoint p;
        p.t = t;
        p.omega_i = seg.omega_i;
        p.omega_s = seg.omega_s;
        p.obs = measure(st, seg.omega_i, seg.omega_s);
        if (trace.solutionProbabilityUnderflow && p.obs.P_s < DBL_MIN) p.obs.P_s = 0.0;
        p.normError = std::abs(st.norm_squared() - 1.0);
        trace.points.push_back(p);
    };

    EffectiveState st = state;
    check_norm(st, 0.0);

    std::size_t seg = 0;
    double segStart = 0.0;
    double segEnd = segs[0].duration;
    double now = 0.0;
    record(st, 0.0, segs[0]);

    for (std::size_t k = 1; k < times.size(); ++k) {
        const double target = times[k];
        // Advance through every segment boundary before the target.
        while (seg + 1 < segs.size() && segEnd <= target + 1e-12 * schedule.total_duration()) {
            const double dt = segEnd - now;
            if (dt > 0.0) Propagator(space, segs[seg].omega_i, segs[seg].omega_s, dt).apply(st);
            now = segEnd;
            ++seg;
            segStart = now;
            segEnd = segStart + segs[seg].duration;
        }
        const double dt = target - now;
        if (dt > 0.0) Propagator(space, segs[seg].omega_i, segs[seg].omega_s, dt).apply(st);
        now = target;
        check_norm(st, now);
        record(st, now, segs[seg]);
    }
    trace.final_state = st;
    return trace;
}

EffectiveState propagate(const EffectiveState& state, const ControlSchedule& schedule) {
    EffectiveState st = state;
    for (const auto& s : schedule.segments()) Propagator(state.space, s.omega_i, s.omega_s, s.duration).apply(st);
    check_norm(st, schedule.total_duration());
    return st;
}

Rates analytic_rates(const Observables& obs, double omega_i, double omega_s, const SearchSpace& space) {
    const double omega = 0.5 * (omega_i + omega_s);
    const double dw = 0.5 * (omega_i - omega_s);
    const double g = space.overlap();
    Rates r;
    r.dPs_dt = 2.0 * (omega + dw) * g * std::sin(obs.alpha_ab) * std::sqrt(obs.P_s * obs.P_i);
    const Complex i{0.0, 1.0};
    r.dA_dt = -2.0 * i * dw * obs.A + i * g * (dw * (obs.P_i + obs.P_s) + omega * (obs.P_i - obs.P_s));
    return r;
}

Complex averaged_overlap(Complex A0, double delta_omega, double omega, double meanPop, double window,
                         const SearchSpace& space) {
    if (!(window > 0.0)) throw Error(ErrorKind::domain, "window must be > 0", format_number(window));
    const double g = space.overlap();
    const double phi = delta_omega * window;
    const Complex i{0.0, 1.0};
    // E = e^{-i phi} sinc(phi) is the window average of e^{-2i dw t}.
    const Complex E = std::polar(1.0, -phi) * sinc(phi);
    // (1 - E) / phi, regular at phi = 0.
    const Complex F = std::abs(phi) < kSincSeriesCutoff ? i + (2.0 / 3.0) * phi - (i / 3.0) * phi * phi
                                                        : (1.0 - E) / phi;
    return A0 * E + 0.5 * g * (1.0 - E) + 0.5 * g * omega * meanPop * window * F;
}

double control_bandwidth(double totalTime, double window) {
    if (!(window > 0.0) || window > totalTime) {
        throw Error(ErrorKind::domain, "control bandwidth needs 0 < window <= totalTime", format_number(window));
    }
    constexpr double kHwhm = 3.79;
    return std::max(kHwhm / window - kHwhm / totalTime, 0.0);
}

double control_bandwidth(const ControlSchedule& schedule, double window) {
    return control_bandwidth(schedule.total_duration(), window);
}

double optimal_detuning(Complex A0, double C, double meanPop, double P_i, double P_s, const SearchSpace& space,
                        DetuningRegime regime) {
    const double g = space.overlap();
    const double upper = space.sqrt_dimension() / 10.0;
    if (!(C >= 10.0)) throw Error(ErrorKind::domain, "optimal detuning requires C >= 10", format_number(C));
    if (!(C <= upper)) throw Error(ErrorKind::domain, "optimal detuning requires C <= 2^(n/2)/10", format_number(C));
    if (regime == DetuningRegime::boundary) return 3.0 / C;

    if (!(P_i >= 4.0 * C * C * space.overlap_squared())) {
        throw Error(ErrorKind::domain, "bulk regime requires P_i >= 4 C^2 / 2^n", format_number(P_i));
    }
    const double denom = std::sqrt(P_i * P_s) + C * meanPop * g;
    const double value = 3.0 / C - (A0.real() - g) / denom;
    return std::min(value, 4.0 / C);
}

double modulated_detuning_suppression(double r) {
    if (!(r >= 0.0 && r <= 0.5)) throw Error(ErrorKind::domain, "suppression needs 0 <= r <= 0.5", format_number(r));
    return 1.0 - 0.25 * r * r;
}

}  // namespace qlimits
