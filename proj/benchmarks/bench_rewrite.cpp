#include <benchmark/benchmark.h>

#include "fpres/families.hpp"
#include "fpres/rewrite.hpp"

namespace {

void BM_NormalForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const fpres::RewriteSystem rs = fpres::fcrs(m, n);
  const fpres::Word input = fpres::pow(fpres::r_relator_lhs(m, n), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::normal_form(rs, input));
  }
  state.SetItemsProcessed(state.iterations() * input.size());
}
BENCHMARK(BM_NormalForm)->Args({2, 2})->Args({3, 3})->Args({4, 4});

void BM_KnuthBendix(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const fpres::RewriteSystem seed = fpres::make_rewrite_system(
      fpres::Alphabet({"a", "b"}),
      {fpres::Rule{fpres::r_relator_lhs(m, n), fpres::Word::letter("a")}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::knuth_bendix(seed));
  }
}
BENCHMARK(BM_KnuthBendix)->Args({2, 2})->Args({3, 2})->Args({3, 3});

void BM_BoundedInjectivity(benchmark::State& state) {
  const int ball = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::bounded_injectivity(2, 2, ball));
  }
}
BENCHMARK(BM_BoundedInjectivity)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
