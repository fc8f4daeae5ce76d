// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "su2branch/kernels.hpp"

using namespace su2b;

namespace {

const BranchingModel& e8_model() {
  static const BranchingModel m(DiagramType(Family::E, 8));
  return m;
}

struct E8Characters {
  FiniteGroup group = build_group(DiagramType(Family::E, 8));
  CharacterTable table = character_table(group, extended_graph(e8_model().roots()));
};

const E8Characters& e8_characters() {
  static const E8Characters c;
  return c;
}

std::vector<int> e8_marks() {
  std::vector<int> d;
  for (int e = 0; e < e8_model().num_ext_nodes(); ++e) d.push_back(e8_model().ext_mark(e));
  return d;
}

template <auto Kernel>
void coxeter(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(e8_model(), n));
}

template <auto Kernel>
void characters(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto& c = e8_characters();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(c.group, c.table, n));
}

template <auto Kernel>
void sum_rule(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto t = serial::coxeter_table(e8_model(), n);
  const auto d = e8_marks();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(t, d));
}

}  // namespace

BENCHMARK(coxeter<serial::coxeter_table>)->Arg(2000)->Arg(20000);
BENCHMARK(coxeter<omp::coxeter_table>)->Arg(2000)->Arg(20000);
BENCHMARK(characters<serial::character_table_multiplicities>)->Arg(60)->Arg(240);
BENCHMARK(characters<omp::character_table_multiplicities>)->Arg(60)->Arg(240);
BENCHMARK(sum_rule<serial::first_sum_rule_violation>)->Arg(20000);
BENCHMARK(sum_rule<omp::first_sum_rule_violation>)->Arg(20000);

BENCHMARK_MAIN();
