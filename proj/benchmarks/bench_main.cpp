#include <benchmark/benchmark.h>

#include "qlimits/bht.hpp"
#include "qlimits/bounds.hpp"
#include "qlimits/constants.hpp"
#include "qlimits/dynamics.hpp"
#include "qlimits/full_space.hpp"
#include "qlimits/keylength.hpp"
#include "qlimits/schedules.hpp"

using namespace qlimits;

static void BM_EvolveBallistic(benchmark::State& state) {
    const SearchSpace s(static_cast<int>(state.range(0)));
    const auto sched = ballistic_schedule(s, constants().hbar * 1e3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(EffectiveState::initial(s), sched, sched.total_duration() / 1000.0));
    }
}
BENCHMARK(BM_EvolveBallistic)->Arg(16)->Arg(256);

static void BM_EvolveAdiabatic(benchmark::State& state) {
    const SearchSpace s(20);
    const auto sched = adiabatic_schedule(s, constants().hbar, 0.1, AdiabaticKind::local, 4096);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(EffectiveState::initial(s), sched));
}
BENCHMARK(BM_EvolveAdiabatic);

static void BM_FullSpaceReference(benchmark::State& state) {
    const SearchSpace s(static_cast<int>(state.range(0)));
    const ControlSchedule sched({{s.sqrt_dimension(), 1.0, 1.0}, {0.5 * s.sqrt_dimension(), 0.3, 1.2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_space_reference(s, sched, sched.total_duration() / 20.0, 3));
    }
}
BENCHMARK(BM_FullSpaceReference)->Arg(8)->Arg(12);

static void BM_ClassicalInvertBits(benchmark::State& state) {
    BoundQuery q;
    q.work = 1e16;
    q.time = 1.6e8;
    q.temperature = 300.0;
    q.successProbability = 0.01;
    q.unknown = Unknown::bits;
    for (auto _ : state) benchmark::DoNotOptimize(classical_bound(q));
}
BENCHMARK(BM_ClassicalInvertBits);

static void BM_QuantumKeylength(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(equivalent_quantum_keylength(4.6e69, 3.15576e21, 1e-12));
}
BENCHMARK(BM_QuantumKeylength);

static void BM_BhtMinImageBits(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bht_min_image_bits(1e16, 1.578e8, 300.0, 0.01));
}
BENCHMARK(BM_BhtMinImageBits);
BENCHMARK_MAIN();
