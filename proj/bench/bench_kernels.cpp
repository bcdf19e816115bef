// Serial reference vs OpenMP kernel for each parallel hot path.
// Arg(0) = serial, Arg(1) = parallel.

#include "ncgb/center.hpp"
#include "ncgb/decomp.hpp"

#include <benchmark/benchmark.h>

using namespace ncgb;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const EnvelopeAlgebra& algebra3() {
  static const EnvelopeAlgebra a = [] {
    EnvelopeAlgebra x = EnvelopeAlgebra::build(3);
    x.fill_table();
    return x;
  }();
  return a;
}

void BM_Axioms(benchmark::State& state) {
  TripleSystem t = matrix_ajts(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(t, mode(state)));
}

void BM_TableFill(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    EnvelopeAlgebra a = EnvelopeAlgebra::build(3);
    state.ResumeTiming();
    a.fill_table(mode(state));
    benchmark::DoNotOptimize(a.filled_entries());
  }
}

void BM_Associativity(benchmark::State& state) {
  const auto& a = algebra3();
  for (auto _ : state) benchmark::DoNotOptimize(check_associativity(a, 20000, 3, mode(state)));
}

void BM_CommutatorSystem(benchmark::State& state) {
  const auto& a = algebra3();
  for (auto _ : state)
    benchmark::DoNotOptimize(commutator_system(a, CommutantProbe::basis, mode(state)));
}

void BM_UnitRelations(benchmark::State& state) {
  const auto& a = algebra3();
  auto units = matrix_units(a);
  for (auto _ : state) benchmark::DoNotOptimize(verify_unit_relations(a, units, mode(state)));
}

void BM_Representation(benchmark::State& state) {
  TripleSystem t = matrix_ajts(4);
  Representation rho = standard_representation(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_representation(t, rho, mode(state)));
}

}  // namespace

BENCHMARK(BM_Axioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableFill)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorSystem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitRelations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Representation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
