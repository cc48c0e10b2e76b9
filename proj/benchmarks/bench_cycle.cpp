#include <benchmark/benchmark.h>

#include "qme/explore.hpp"

namespace {

void BM_RunCycleExact(benchmark::State& state) {
    const qme::CycleParams params{1.0, 1.0, qme::MeasurementBasis{1.1, 1.8},
                                  {qme::PropagatorChoice::Kind::Exact, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(qme::run_cycle(params));
}
BENCHMARK(BM_RunCycleExact);

void BM_RunCycleSliced(benchmark::State& state) {
    const qme::CycleParams params{
        1.0, 1.0, qme::MeasurementBasis{1.1, 1.8},
        {qme::PropagatorChoice::Kind::Sliced,
         static_cast<std::size_t>(state.range(0))}};
    for (auto _ : state) benchmark::DoNotOptimize(qme::run_cycle(params));
}
BENCHMARK(BM_RunCycleSliced)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 16);

void BM_Sweep(benchmark::State& state) {
    const qme::SweepGrid grid{46, 90};
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::sweep(qme::kDefaultOmegaTau, 1.0,
                                            {qme::PropagatorChoice::Kind::Exact, 0},
                                            grid,
                                            static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
