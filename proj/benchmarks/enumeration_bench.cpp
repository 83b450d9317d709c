#include <benchmark/benchmark.h>

#include "flockgraph/constructive.hpp"
#include "flockgraph/dukes.hpp"
#include "flockgraph/enumerate.hpp"
#include "flockgraph/verify.hpp"

namespace {

void BM_OrientationDecode(benchmark::State& state) {
  const flock::OrientationRange range({2, 2, 2});
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(range.at(index));
    index = (index + 1) & (range.size() - 1);
  }
}
BENCHMARK(BM_OrientationDecode);

void BM_PeckDistances(benchmark::State& state) {
  const flock::MultiFlockGraph g =
      flock::random_graph(std::vector<int>{static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(0))},
                          7);
  for (auto _ : state) {
    for (flock::ChickenId c = 0; c < g.chicken_count(); ++c) {
      benchmark::DoNotOptimize(flock::peck_distances(g, c));
    }
  }
}
BENCHMARK(BM_PeckDistances)->Arg(3)->Arg(6)->Arg(10);

void BM_OracleClassification(benchmark::State& state) {
  const flock::MultiFlockGraph g = flock::random_graph(std::vector<int>{2, 2, 2}, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flock::oracle_classification(g));
  }
}
BENCHMARK(BM_OracleClassification);

void BM_Theorem10Classify(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const flock::MultiFlockGraph g = flock::random_graph(std::vector<int>{2, 2, 2}, seed++);
    benchmark::DoNotOptimize(flock::theorem10_classify(g));
  }
}
BENCHMARK(BM_Theorem10Classify);

// The verification core: a full THM10 sweep over 4096 orientations.
void BM_VerifySweep(benchmark::State& state) {
  const std::vector<int> sizes{2, 2, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        flock::verify(flock::TheoremId::Thm10, sizes, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_VerifySweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
