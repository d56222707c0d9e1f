#include <benchmark/benchmark.h>

#include "bvdouble/suites.hpp"

namespace {

void run(benchmark::State& state, const char* suite, bvdouble::Schedule schedule) {
  bvdouble::Config c;
  bvdouble::override_samples(c, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bvdouble::run_suite(suite, c, schedule));
}

void BM_bvlz_serial(benchmark::State& s) { run(s, "bvlz", bvdouble::Schedule::serial); }
void BM_bvlz_parallel(benchmark::State& s) { run(s, "bvlz", bvdouble::Schedule::parallel); }
void BM_ym_serial(benchmark::State& s) { run(s, "ym", bvdouble::Schedule::serial); }
void BM_ym_parallel(benchmark::State& s) { run(s, "ym", bvdouble::Schedule::parallel); }

}  // namespace

BENCHMARK(BM_bvlz_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bvlz_parallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ym_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ym_parallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
