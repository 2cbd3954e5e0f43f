#include <benchmark/benchmark.h>

#include "dilabel/exact_solver.hpp"
#include "support/generators.hpp"

namespace {

using dilabel::testing::Rng;

void BM_OracleRandomDigraph(benchmark::State& state) {
  Rng rng(4);
  const auto d = dilabel::testing::random_digraph(state.range(0), 0.3, rng);
  const dilabel::Separation sep(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dilabel::exact_lambda(d, sep));
}
BENCHMARK(BM_OracleRandomDigraph)->DenseRange(4, 10, 2);

void BM_OracleDitree(benchmark::State& state) {
  Rng rng(5);
  const auto tree = dilabel::testing::random_ditree(state.range(0), rng);
  const dilabel::Separation sep(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dilabel::exact_lambda(tree, sep));
}
BENCHMARK(BM_OracleDitree)->DenseRange(4, 12, 2);

}  // namespace
