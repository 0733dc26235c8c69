#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/exactla.hpp"
#include "lierig/rigidity.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace lierig;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(gen);
  return m;
}

void BM_RankBareiss(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankBareiss)->Arg(8)->Arg(16)->Arg(32);

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, 2);
  m.set_column(n - 1, m.column(0));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(8)->Arg(16)->Arg(32);

void BM_DerivationAlgebraLadder(benchmark::State& state) {
  const auto L = make_ladder(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(L));
}
BENCHMARK(BM_DerivationAlgebraLadder)->DenseRange(4, 12, 4);

void BM_DerivationAlgebraSemidirect(benchmark::State& state) {
  const auto g = make_der_semidirect(catalog_entry("charnilp", {}).algebra);
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(g));
}
BENCHMARK(BM_DerivationAlgebraSemidirect)->Unit(benchmark::kMillisecond);

void BM_CharNilpotent(benchmark::State& state) {
  const auto l = catalog_entry("charnilp", {}).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(is_characteristically_nilpotent(l));
}
BENCHMARK(BM_CharNilpotent)->Unit(benchmark::kMillisecond);

void BM_RigidityReport(benchmark::State& state) {
  const auto l = catalog_entry("charnilp", {}).algebra;
  const auto g = make_der_semidirect(l);
  const auto e = Embedding::certify(l, g, tail_inclusion(l.dim(), g.dim()));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_report(e));
}
BENCHMARK(BM_RigidityReport)->Unit(benchmark::kMillisecond);

void BM_RigidityReportLadder(benchmark::State& state) {
  const auto n = state.range(0);
  const auto ln = make_ladder(n);
  const auto e = Embedding::certify(make_abelian(n), ln, tail_inclusion(static_cast<std::size_t>(n), ln.dim()));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_report(e));
}
BENCHMARK(BM_RigidityReportLadder)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
