#include <benchmark/benchmark.h>

#include "slicetorus/bennequin.hpp"
#include "slicetorus/cobordism.hpp"
#include "slicetorus/estimator.hpp"
#include "slicetorus/knots.hpp"

namespace {

using namespace slicetorus;

void BM_ClosureSummary(benchmark::State& state) {
  const auto word = torus_braid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(closure_summary(word));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(word.length()));
}
BENCHMARK(BM_ClosureSummary)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SliceTorusInterval(benchmark::State& state) {
  const auto word = parse_braid("3: 1 1 1 1 1 -2 -1 -1 -1 -2");
  for (auto _ : state) benchmark::DoNotOptimize(slice_torus_interval(word));
}
BENCHMARK(BM_SliceTorusInterval);

// The lemma (i) movie for a trefoil sum with n summands ends at T(p, p+1), p = 3n - 1.
void BM_VerifyLemmaI(benchmark::State& state) {
  std::vector<int> letters;
  const int summands = static_cast<int>(state.range(0));
  for (int s = 1; s <= summands; ++s) letters.insert(letters.end(), 3, s);
  const auto cert = build_lemma_i(BraidWord(summands + 1, letters));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert));
  state.counters["moves"] = static_cast<double>(cert.moves.size());
}
BENCHMARK(BM_VerifyLemmaI)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BuildLemmaII(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_lemma_ii(p));
}
BENCHMARK(BM_BuildLemmaII)->RangeMultiplier(2)->Range(2, 32);

void BM_EllBracket(benchmark::State& state) {
  const auto word = parse_braid("3: 1 1 1 2 2 2");
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ell_bracket(word, p_max));
}
BENCHMARK(BM_EllBracket)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
