#include <benchmark/benchmark.h>

#include "dilabel/ditree_solver.hpp"
#include "support/generators.hpp"

namespace {

using dilabel::testing::Rng;

// Every dipath has length at most 3, so ditree_lambda_j goes through the
// span-(j+1) decision procedure.
void BM_DitreeLambdaLayered(benchmark::State& state) {
  Rng rng(1);
  const auto tree = dilabel::testing::random_layered_ditree(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dilabel::ditree_lambda_j(tree, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DitreeLambdaLayered)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_DitreeLambdaRandom(benchmark::State& state) {
  Rng rng(2);
  const auto tree = dilabel::testing::random_recursive_ditree(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dilabel::ditree_lambda_j(tree, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DitreeLambdaRandom)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_Decide(benchmark::State& state) {
  Rng rng(3);
  const auto tree = dilabel::testing::random_layered_ditree(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dilabel::decide_span_j_plus_1(tree, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decide)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

}  // namespace
