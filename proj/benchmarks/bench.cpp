#include <benchmark/benchmark.h>

#include "nakalab/classify.hpp"
#include "nakalab/hereditary.hpp"
#include "nakalab/parse.hpp"
#include "nakalab/strings.hpp"

namespace {

const std::string kFixtures = NAKALAB_FIXTURES_DIR;

void BM_ClassifyLambda4(benchmark::State& state) {
  auto alg = nakalab::parse_algebra_file(kFixtures + "/ladder_4.quiver");
  for (auto _ : state) benchmark::DoNotOptimize(nakalab::classify(alg));
}
BENCHMARK(BM_ClassifyLambda4);

void BM_StringsLambda4(benchmark::State& state) {
  auto alg = nakalab::parse_algebra_file(kFixtures + "/ladder_4.quiver");
  for (auto _ : state) benchmark::DoNotOptimize(nakalab::enumerate_strings(*alg));
}
BENCHMARK(BM_StringsLambda4);

void BM_PositiveRootsE8(benchmark::State& state) {
  auto alg = nakalab::dynkin_orientation({'E', 8}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nakalab::positive_roots(alg->quiver()));
}
BENCHMARK(BM_PositiveRootsE8);

void BM_HereditaryE8(benchmark::State& state) {
  auto alg = nakalab::dynkin_orientation({'E', 8}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nakalab::hereditary_indecomposables(alg));
}
BENCHMARK(BM_HereditaryE8);

void BM_SubmoduleLattice(benchmark::State& state) {
  auto m = nakalab::parse_module_file(kFixtures + "/d4_121.rep");
  for (auto _ : state) benchmark::DoNotOptimize(nakalab::enumerate_submodules(m));
}
BENCHMARK(BM_SubmoduleLattice);

}  // namespace

BENCHMARK_MAIN();
