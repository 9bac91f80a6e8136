#include <benchmark/benchmark.h>

#include "vcc/kvcc.hpp"
#include "vcc/sparsify.hpp"
#include "vcc/testkit/generators.hpp"
#include "vcc/twovcc.hpp"

namespace {

// Bidirected 4-cliques glued over all n vertices, topped up to 4n edges.
vcc::DiGraph planted(std::size_t n) {
  vcc::testkit::GenSpec spec;
  spec.model = vcc::testkit::GenModel::Planted;
  spec.n = n;
  spec.m = 4 * n;
  spec.seed = 7;
  spec.sizes.assign((n - 1) / 3, 4);
  return vcc::testkit::gen_random(spec);
}

template <vcc::TwoVccAlgorithm Algo>
void BM_TwoVccs(benchmark::State& state) {
  const vcc::DiGraph g = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vcc::two_vccs(g, Algo));
  state.SetComplexityN(state.range(0));
}

void BM_ThreeVccs(benchmark::State& state) {
  const vcc::DiGraph g = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vcc::three_vccs(g));
}

void BM_SparsifyProblem1(benchmark::State& state) {
  const vcc::DiGraph g = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vcc::sparsify_problem1(g));
}

}  // namespace

BENCHMARK(BM_TwoVccs<vcc::TwoVccAlgorithm::ErusalimskiiSvetlov>)->RangeMultiplier(2)->Range(100, 800)->Complexity();
BENCHMARK(BM_TwoVccs<vcc::TwoVccAlgorithm::Split>)->RangeMultiplier(2)->Range(100, 800)->Complexity();
BENCHMARK(BM_TwoVccs<vcc::TwoVccAlgorithm::DominatorTree>)->RangeMultiplier(2)->Range(100, 800)->Complexity();
BENCHMARK(BM_TwoVccs<vcc::TwoVccAlgorithm::PerVertex>)->RangeMultiplier(2)->Range(100, 400)->Complexity();
BENCHMARK(BM_ThreeVccs)->RangeMultiplier(2)->Range(50, 200);
BENCHMARK(BM_SparsifyProblem1)->RangeMultiplier(2)->Range(100, 400);

BENCHMARK_MAIN();
