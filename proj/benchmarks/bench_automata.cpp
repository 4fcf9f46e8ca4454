#include <benchmark/benchmark.h>

#include "fpres/fsa.hpp"

namespace {

fpres::LetterWordTable doubling_table() {
  fpres::LetterWordTable table;
  const fpres::Symbol a{"a", +1}, b{"b", +1};
  for (const auto& i : {a, b})
    for (const auto& j : {a, b})
      table.entries[{i, j}] = fpres::Word::letter(i.name) * fpres::Word::letter(j.name);
  return table;
}

void BM_PhiTransform(benchmark::State& state) {
  const fpres::Fsa a = fpres::singleton(fpres::Word::letter("a"));
  const fpres::Fsa b = fpres::singleton(fpres::Word::letter("b"));
  const fpres::Fsa sigma = fpres::union_of(a, b);
  const fpres::Fsa lang =
      fpres::concat(fpres::concat(sigma, sigma), fpres::star(sigma));
  const fpres::LetterWordTable table = doubling_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::phi_transform(lang, table));
  }
}
BENCHMARK(BM_PhiTransform);

void BM_DeterminizeOmega(benchmark::State& state) {
  const fpres::Fsa omega = fpres::omega_language();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::determinize(omega));
  }
}
BENCHMARK(BM_DeterminizeOmega);

void BM_EnumerateOmega(benchmark::State& state) {
  const fpres::Fsa omega = fpres::omega_language();
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpres::enumerate_language(omega, len));
  }
}
BENCHMARK(BM_EnumerateOmega)->Arg(10)->Arg(14);

}  // namespace
