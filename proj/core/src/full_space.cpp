#include "qlimits/full_space.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>
#include <vector>

#include "qlimits/error.hpp"
#include "qlimits/trace_io.hpp"

namespace qlimits {

namespace {

constexpr double kMaxSubstepNorm = 0.5;
constexpr int kMaxTaylorTerms = 80;

class FullSpaceState {
public:
    FullSpaceState(int bits, std::uint64_t solution)
        : amp_(std::size_t{1} << bits), solution_(solution), uniform_(1.0 / std::sqrt(static_cast<double>(amp_.size()))) {
        for (auto& a : amp_) a = uniform_;
    }

    Complex initial_overlap() const {  // <i|psi>
        Complex sum{};
        for (const auto& a : amp_) sum += a;
        return sum * uniform_;
    }
    Complex solution_overlap() const { return amp_[solution_]; }

    double norm_squared() const {
        double n = 0.0;
        for (const auto& a : amp_) n += std::norm(a);
        return n;
    }

    // psi <- exp(-i H tau) psi with H/hbar = w_i |i><i| + w_s |s><s|.
    void propagate(double omega_i, double omega_s, double tau) {
        const double scale = (omega_i + omega_s) * tau;
        const int substeps = std::max(1, static_cast<int>(std::ceil(scale / kMaxSubstepNorm)));
        const double h = tau / substeps;
        std::vector<Complex> term(amp_.size());
        std::vector<Complex> next(amp_.size());
        for (int step = 0; step < substeps; ++step) {
            term = amp_;
            for (int k = 1; k <= kMaxTaylorTerms; ++k) {
                apply_hamiltonian(term, next, omega_i, omega_s);
                const Complex factor(0.0, -h / k);
                double termNorm = 0.0;
                for (std::size_t j = 0; j < next.size(); ++j) {
                    term[j] = factor * next[j];
                    amp_[j] += term[j];
                    termNorm += std::norm(term[j]);
                }
                if (termNorm < 1e-36) break;
            }
        }
    }

private:
    void apply_hamiltonian(const std::vector<Complex>& in, std::vector<Complex>& out, double omega_i,
                           double omega_s) const {
        Complex proj{};
        for (const auto& a : in) proj += a;
        proj *= uniform_ * omega_i;
        for (auto& o : out) o = uniform_ * proj;
        out[solution_] += omega_s * in[solution_];
    }

    std::vector<Complex> amp_;
    std::size_t solution_;
    double uniform_;
};

}  // namespace

Trace full_space_reference(const SearchSpace& space, const ControlSchedule& schedule, double sampleStep,
                           std::uint64_t solutionIndex) {
    if (space.bits() > kFullSpaceMaxBits) {
        throw Error(ErrorKind::capacity, "full-space reference is limited to n <= 14",
                    std::to_string(space.bits()));
    }
    const std::uint64_t dim = std::uint64_t{1} << space.bits();
    if (solutionIndex >= dim) {
        throw Error(ErrorKind::range, "solution index must be < 2^n", std::to_string(solutionIndex));
    }
    const auto times = sample_times(schedule, sampleStep);
    const auto& segs = schedule.segments();

    FullSpaceState psi(space.bits(), solutionIndex);
    Trace trace;

    auto record = [&](double t, const Segment& seg) {
        const Complex ip = psi.initial_overlap();
        const Complex sp = psi.solution_overlap();
        TracePoint p;
        p.t = t;
        p.omega_i = seg.omega_i;
        p.omega_s = seg.omega_s;
        p.obs.P_s = std::norm(sp);
        p.obs.P_i = std::norm(ip);
        p.obs.A = std::conj(sp) * ip;
        p.obs.alpha_ab = std::arg(p.obs.A);
        const auto e = eigenenergies(space, seg.mean_frequency(), seg.detuning());
        p.obs.E_plus = e.plus;
        p.obs.E_minus = e.minus;
        p.normError = std::abs(psi.norm_squared() - 1.0);
        if (p.normError > 1e-9) {
            throw Error(ErrorKind::internal, "full-space norm drift exceeds 1e-9", format_number(t));
        }
        trace.points.push_back(p);
    };

    std::size_t seg = 0;
    double segEnd = segs[0].duration;
    double now = 0.0;
    record(0.0, segs[0]);
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double target = times[k];
        while (seg + 1 < segs.size() && segEnd <= target + 1e-12 * schedule.total_duration()) {
            if (segEnd > now) psi.propagate(segs[seg].omega_i, segs[seg].omega_s, segEnd - now);
            now = segEnd;
            ++seg;
            segEnd = now + segs[seg].duration;
        }
        if (target > now) psi.propagate(segs[seg].omega_i, segs[seg].omega_s, target - now);
        now = target;
        record(now, segs[seg]);
    }

    const Complex ip = psi.initial_overlap();
    const Complex sp = psi.solution_overlap();
    trace.final_state = EffectiveState{ip, (sp - space.overlap() * ip) / space.complement(), space};
    return trace;
}

}  // namespace qlimits
