#include <benchmark/benchmark.h>

#include <random>

#include "cwc/cwc.hpp"

using namespace cwc;

namespace {

LinearCode scrambled(unsigned k, std::size_t m, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return permute_code(Permutation::from_images(std::move(images)),
                      canonical_code({k, m, n}));
}

void BM_SpanBasis(benchmark::State& state) {
  const std::vector<Codeword> rows = canonical_rows({6, 4, 260});
  for (auto _ : state) benchmark::DoNotOptimize(span_basis(rows));
}
BENCHMARK(BM_SpanBasis);

void BM_ConstantWeight(benchmark::State& state) {
  const LinearCode code = canonical_code({10, 1, 1023});
  for (auto _ : state) benchmark::DoNotOptimize(constant_weight(code));
}
BENCHMARK(BM_ConstantWeight);

void BM_CheckCharacterization(benchmark::State& state) {
  const LinearCode code = canonical_code({6, 2, 130});
  for (auto _ : state) benchmark::DoNotOptimize(check_characterization(code));
}
BENCHMARK(BM_CheckCharacterization);

void BM_BruteForcePAut_226(benchmark::State& state) {
  const LinearCode code = canonical_code({2, 2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_paut(code));
}
BENCHMARK(BM_BruteForcePAut_226);

void BM_BruteForcePAut_317(benchmark::State& state) {
  const LinearCode code = canonical_code({3, 1, 7});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_paut(code));
}
BENCHMARK(BM_BruteForcePAut_317);

void BM_EquivalencePermutation(benchmark::State& state) {
  const LinearCode a = scrambled(4, 1, 20, 1);
  const LinearCode b = scrambled(4, 1, 20, 2);
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_permutation(a, b));
}
BENCHMARK(BM_EquivalencePermutation);

void BM_ClosureOrder(benchmark::State& state) {
  const PAutReport rep = structured_paut_generators(canonical_code({2, 3, 9}));
  for (auto _ : state) benchmark::DoNotOptimize(closure_order(rep.generators));
}
BENCHMARK(BM_ClosureOrder);

}  // namespace

BENCHMARK_MAIN();
