#include <benchmark/benchmark.h>

#include "qsord/acyclicity.hpp"
#include "qsord/closure.hpp"
#include "qsord/generate.hpp"
#include "qsord/qs_order.hpp"
#include "qsord/qs_sequence.hpp"
#include "qsord/saturation.hpp"

using namespace qsord;

namespace {

Structure example() {
  return make_structure({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}}, {{"a", "b"}, {"c", "d"}});
}

void BM_IsQsa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure s = random_qsa_structure(n, 1, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(is_qsa(s).ok);
}
BENCHMARK(BM_IsQsa)->RangeMultiplier(2)->Range(4, 64);

void BM_IsQsaNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure s = random_qsa_structure(n, 1, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(is_qsa_naive(s).ok);
}
BENCHMARK(BM_IsQsaNaive)->DenseRange(4, 12, 4);

void BM_Close(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure s = random_qsa_structure(n, 2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(close(s).iterations);
}
BENCHMARK(BM_Close)->RangeMultiplier(2)->Range(4, 32);

void BM_CloseByIntersection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure s = random_qsa_structure(n, 2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(close_oracle(s));
}
BENCHMARK(BM_CloseByIntersection)->DenseRange(3, 6);

void BM_OneSaturation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure s = random_qsa_structure(n, 3, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(one_saturation(s));
}
BENCHMARK(BM_OneSaturation)->RangeMultiplier(2)->Range(4, 64);

void BM_SaturationsOfExample(benchmark::State& state) {
  const Structure s = example();
  for (auto _ : state) benchmark::DoNotOptimize(saturations(s).members.size());
}
BENCHMARK(BM_SaturationsOfExample);

void BM_EnumerateQsSeqs(benchmark::State& state) {
  const auto labels = default_labels(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_qs_seqs(labels).size());
}
BENCHMARK(BM_EnumerateQsSeqs)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SequenceRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QsSeq q = random_qs_seq(default_labels(n), 4);
  for (auto _ : state) benchmark::DoNotOptimize(i_map(g_map(q)));
}
BENCHMARK(BM_SequenceRoundTrip)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
