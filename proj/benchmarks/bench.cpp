#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "sdclass/augment.hpp"
#include "sdclass/canonical.hpp"
#include "sdclass/code.hpp"
#include "sdclass/gf2.hpp"
#include "sdclass/group.hpp"
#include "sdclass/perm.hpp"

namespace {

// A fixed pseudo-random chain of two-column extensions from i2; every link
// stays self-dual, so this yields a representative [2k, k] input without
// running the classifier.
sdc::SelfDualCode grown_code(int k) {
  std::mt19937 rng(2718);
  sdc::SelfDualCode c = sdc::SelfDualCode::i2();
  while (c.k < k) {
    std::uint64_t x;
    do {
      x = rng() & ((std::uint64_t{1} << c.k) - 1);
    } while (__builtin_popcountll(x) % 2 == 0);
    c = sdc::extend(c, sdc::BitVec(x, c.k));
  }
  return c;
}

void BM_FromGenerator(benchmark::State& state) {
  const sdc::SelfDualCode c = grown_code(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::SelfDualCode::from_generator(c.gen));
}
BENCHMARK(BM_FromGenerator)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Rref(benchmark::State& state) {
  const sdc::SelfDualCode c = grown_code(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    sdc::BitMat m = c.gen;
    benchmark::DoNotOptimize(sdc::rref(m));
  }
}
BENCHMARK(BM_Rref)->Arg(12)->Arg(16)->Unit(benchmark::kNanosecond);

void BM_Canonical(benchmark::State& state) {
  const sdc::SelfDualCode c = grown_code(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::canonical_outcome(c));
}
BENCHMARK(BM_Canonical)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ExtensionOrbits(benchmark::State& state) {
  const sdc::SelfDualCode c = grown_code(static_cast<int>(state.range(0)));
  const sdc::AutomorphismGroup aut = sdc::canonical_outcome(c).aut;
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::extension_orbits(c, aut));
}
BENCHMARK(BM_ExtensionOrbits)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_GroupOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<sdc::Perm> gens;
  gens.push_back(sdc::Perm::transposition(n, 0, 1));
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
  gens.push_back(sdc::Perm(std::move(img)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sdc::group_order(n, gens));
}
BENCHMARK(BM_GroupOrder)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
