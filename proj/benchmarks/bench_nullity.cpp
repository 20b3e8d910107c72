#include <benchmark/benchmark.h>

#include <skewband/skewband.hpp>

using namespace skewband;

// n chosen mid-period so the walk neither degenerates nor hits a peak
static void BM_GraphNullity(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const mpz_class n = mpz_class(k) * k / 3 + 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(nullity_by_cycles(GraphSpec(n, k)));
  state.SetComplexityN(k);
}
BENCHMARK(BM_GraphNullity)->Range(1000, 1000000)->Complexity();

static void BM_GraphDecompose(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  GraphSpec spec(mpz_class(k) * k / 3 + 1, k);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(spec));
}
BENCHMARK(BM_GraphDecompose)->Arg(1000)->Arg(100000);

static void BM_ClosedFormQuery(benchmark::State& state) {
  LineGraph table = LineGraph::build(state.range(0));
  mpz_class n("123456789123456789123456789");
  for (auto _ : state) benchmark::DoNotOptimize(table.nullity(n));
}
BENCHMARK(BM_ClosedFormQuery)->Arg(300)->Arg(2000);

static void BM_LineGraphBuild(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(LineGraph::build(k));
}
BENCHMARK(BM_LineGraphBuild)->Arg(50)->Arg(300);

static void BM_RankModP(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const IntegerMatrix m = build_integer_matrix({n, 8});
  const PrimeField field = smallest_admissible_prime(8);
  for (auto _ : state) benchmark::DoNotOptimize(nullity_mod_p(m, field));
}
BENCHMARK(BM_RankModP)->Arg(64)->Arg(128)->Arg(256);

static void BM_RankFractionFree(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const IntegerMatrix m = build_integer_matrix({n, 8});
  for (auto _ : state) benchmark::DoNotOptimize(nullity_fraction_free(m));
}
BENCHMARK(BM_RankFractionFree)->Arg(64)->Arg(128);

static void BM_DeterminantPoly(benchmark::State& state) {
  const BandMatrixSpec spec{state.range(0), 4};
  for (auto _ : state) benchmark::DoNotOptimize(determinant_poly(spec));
}
BENCHMARK(BM_DeterminantPoly)->Arg(16)->Arg(32);

static void BM_HeightStats(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_stats(state.range(0)));
}
BENCHMARK(BM_HeightStats)->Arg(300)->Arg(10000);

BENCHMARK_MAIN();
