// Serial reference vs OpenMP pair sweep on the same jobs.
#include "steinext/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace steinext;

struct Fixture {
  RootSystem rs = parse_root_system("B3");
  WeylGroup group = generate_weyl(rs);
  RingSpec spec = RingSpec::integers_mod(23, 5);
  std::vector<PairJob> jobs = all_pair_jobs(rs.rank());
  SweepContext ctx{&rs, spec, &group};
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_SweepSerial(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_pairs_serial(f.ctx, f.jobs));
}

void BM_SweepParallel(benchmark::State& state) {
  auto& f = fixture();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_pairs_parallel(f.ctx, f.jobs, threads));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
