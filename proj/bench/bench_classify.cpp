// Serial reference vs OpenMP cone classification.

#include <benchmark/benchmark.h>

#include <random>

#include "helpers.hpp"
#include "rrtrop/newton.hpp"
#include "rrtrop/tropical.hpp"

using namespace rrtrop;
using namespace testing_helpers;

namespace {

Polynomial workload(int which) {
  auto R = make_ring({"x", "y", "z"});
  if (which == 0) return P(R, "(x-y-z)^4 + (x-y-1)^2");
  std::mt19937_64 rng(static_cast<unsigned>(which));
  return random_poly(rng, R, 12, 5);
}

void BM_serial(benchmark::State& state) {
  Polynomial f = workload(static_cast<int>(state.range(0)));
  Fan fan{NewtonPolytope(f)};
  for (auto _ : state) benchmark::DoNotOptimize(classify_all_cones_serial(f, fan));
  state.counters["cones"] = static_cast<double>(fan.cones().size());
}

void BM_parallel(benchmark::State& state) {
  Polynomial f = workload(static_cast<int>(state.range(0)));
  Fan fan{NewtonPolytope(f)};
  for (auto _ : state) benchmark::DoNotOptimize(classify_all_cones(f, fan));
  state.counters["cones"] = static_cast<double>(fan.cones().size());
}

}  // namespace

BENCHMARK(BM_serial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
