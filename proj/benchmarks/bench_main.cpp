#include <benchmark/benchmark.h>

#include "thompson/structure.hpp"

namespace {

using namespace thompson;

void BM_Compose(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const PLElement f = random_element(2, length, 1);
  const PLElement g = random_element(2, length, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
  state.counters["breaks"] = static_cast<double>(f.breaks().size() + g.breaks().size());
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16)->Arg(64);

void BM_Inverse(benchmark::State& state) {
  const PLElement f = random_element(3, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(f));
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(16)->Arg(64);

void BM_Generator(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(standard_generator(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Generator)->Arg(1)->Arg(10)->Arg(40);

void BM_IccWitness(benchmark::State& state) {
  const PLElement f = make_f1(Rational(Integer(1), Integer(4)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(icc_witness(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IccWitness)->Arg(10)->Arg(50);

void BM_CommutingPair(benchmark::State& state) {
  std::vector<PLElement> e;
  for (std::uint64_t s = 0; s < 5; ++s) e.push_back(semidirect_decompose(random_element(2, 8, s)).d);
  for (auto _ : state) benchmark::DoNotOptimize(commuting_pair(e, 2));
}
BENCHMARK(BM_CommutingPair);

}  // namespace

BENCHMARK_MAIN();
