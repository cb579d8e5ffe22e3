#include <benchmark/benchmark.h>

#include <iterator>

#include "seqstate/sequences.hpp"
#include "seqstate/sieves.hpp"

namespace {

using namespace seqstate;

void BM_Primes(benchmark::State& state) {
  const auto limit = std::uint64_t{1} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sieves::primes_upto(limit));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * limit));
}
BENCHMARK(BM_Primes)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

void BM_Abundant(benchmark::State& state) {
  const auto limit = std::uint64_t{1} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sieves::abundant_upto(limit, std::size_t{1} << 22));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * limit));
}
BENCHMARK(BM_Abundant)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

void BM_Lucky(benchmark::State& state) {
  const auto limit = std::uint64_t{1} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sieves::lucky_upto(limit));
}
BENCHMARK(BM_Lucky)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const auto family = kAllFamilies[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(generate({family, 3}, 20));
  state.SetLabel(std::string(family_name(family)));
}
BENCHMARK(BM_Generate)->DenseRange(0, static_cast<int>(std::size(kAllFamilies)) - 1)->Unit(benchmark::kMillisecond);

}  // namespace
