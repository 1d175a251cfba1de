// Cost profile of the hot paths: word products, operator recursions, and the
// two oracle backends. Product/operator benchmarks clear the library's memo
// tables each iteration so the numbers reflect cold recursion cost, not
// steady-state lookups.

#include <benchmark/benchmark.h>

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/operators.hpp"
#include "mzv/oracles.hpp"
#include "mzv/products.hpp"
#include "mzv/word.hpp"

namespace {

using namespace mzv;

void BM_harmonic_deg6(benchmark::State& state) {
  const Word a = Word::parse("yxyxyx"), b = Word::parse("yyxyxx");
  for (auto _ : state) {
    clear_product_caches();
    benchmark::DoNotOptimize(harmonic(a, b));
  }
}
BENCHMARK(BM_harmonic_deg6);

void BM_diamond_deg6(benchmark::State& state) {
  const Word a = Word::parse("yxyxyx"), b = Word::parse("yyxyxx");
  for (auto _ : state) {
    clear_product_caches();
    benchmark::DoNotOptimize(diamond(a, b));
  }
}
BENCHMARK(BM_diamond_deg6);

void BM_quasi_del_n3_deg8(benchmark::State& state) {
  const Word w = Word::parse("yxyxyxyx");
  for (auto _ : state) {
    clear_operator_caches();
    clear_product_caches();
    benchmark::DoNotOptimize(quasi_del(3, w));
  }
}
BENCHMARK(BM_quasi_del_n3_deg8);

void BM_q_n_explicit_n8(benchmark::State& state) {
  for (auto _ : state) {
    clear_operator_caches();
    benchmark::DoNotOptimize(q_n_explicit(8));
  }
}
BENCHMARK(BM_q_n_explicit_n8);

void BM_mzv_numeric_12_1e5(benchmark::State& state) {
  const Index k({1, 2});
  const NumericConfig cfg{100000, 0};
  for (auto _ : state) benchmark::DoNotOptimize(mzv_numeric(k, cfg));
}
BENCHMARK(BM_mzv_numeric_12_1e5);

void BM_zeta_a_p199(benchmark::State& state) {
  const Index k({1, 2, 3});
  for (auto _ : state) {
    clear_finite_caches();
    benchmark::DoNotOptimize(zeta_a_mod_p(k, 199));
  }
}
BENCHMARK(BM_zeta_a_p199);

}  // namespace

BENCHMARK_MAIN();
