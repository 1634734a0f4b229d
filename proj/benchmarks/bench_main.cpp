#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "pmaps/census.hpp"
#include "pmaps/group_input.hpp"
#include "pmaps/presentation.hpp"
#include "pmaps/todd_coxeter.hpp"

using namespace pmaps;

namespace {

GroupFile load(const std::string& name) {
  std::ifstream in(std::string(PMAPS_CORPUS_DIR) + "/" + name + ".grp");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

void bm_closure_s6(benchmark::State& state) {
  std::vector<Permutation> gens{Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}}),
                                Permutation::from_cycles(6, {{1, 2}})};
  for (auto _ : state) {
    auto g = FiniteGroup::closure(6, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_closure_s6)->Unit(benchmark::kMillisecond);

void bm_todd_coxeter(benchmark::State& state, const char* name) {
  auto file = load(name);
  for (auto _ : state) {
    auto table = todd_coxeter(file.presentation, {});
    benchmark::DoNotOptimize(table.num_cosets());
  }
}
BENCHMARK_CAPTURE(bm_todd_coxeter, ex6_1, "ex6_1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_todd_coxeter, ex7_1, "ex7_1")->Unit(benchmark::kMillisecond);

void bm_census(benchmark::State& state, const char* name, bool flagged) {
  auto g = realize(load(name)).group;
  for (auto _ : state) {
    auto entries = flagged ? enumerate_flagged(g) : enumerate_oriented(g);
    benchmark::DoNotOptimize(entries.size());
  }
}
BENCHMARK_CAPTURE(bm_census, s4_flagged, "s4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_census, gl23_oriented, "ex6_2", false)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
