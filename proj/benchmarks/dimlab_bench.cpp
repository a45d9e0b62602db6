#include <benchmark/benchmark.h>

#include "dimlab/binary_arith.hpp"
#include "dimlab/core_tower.hpp"
#include "dimlab/dimension.hpp"
#include "dimlab/enumeration.hpp"
#include "dimlab/partition.hpp"

using namespace dimlab;

namespace {

// Residue class of every partition of n.
void BM_DimClassAllPartitions(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<Partition> all;
  for (const Partition& p : enumerate_partitions(n)) all.push_back(p);
  for (auto _ : state) {
    int odd = 0;
    for (const Partition& p : all) odd += dim_class(p).is_odd() ? 1 : 0;
    benchmark::DoNotOptimize(odd);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_DimClassAllPartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_TowerClassification(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<Partition> all;
  for (const Partition& p : enumerate_partitions(n)) all.push_back(p);
  for (auto _ : state) {
    int odd = 0;
    for (const Partition& p : all) odd += classify_by_tower(p) == TowerClass::odd ? 1 : 0;
    benchmark::DoNotOptimize(odd);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_TowerClassification)->Arg(20)->Arg(30);

void BM_OddPartitionStream(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (const Partition& p : enumerate_odd_partitions(n)) {
      benchmark::DoNotOptimize(p.size());
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_odd(n)));
}
BENCHMARK(BM_OddPartitionStream)->Arg(40)->Arg(100)->Arg(200);

// Enumeration and classification together, as the exhaustive count does it.
void BM_PartitionWalk(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    std::uint64_t a = 0;
    for (const Partition& p : enumerate_partitions(n)) a += dim_class(p).is_odd() ? 1 : 0;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_PartitionWalk)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_OdFactorial(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(od_factorial(n));
    n = n * 6364136223846793005ULL + 1442695040888963407ULL;
  }
}
BENCHMARK(BM_OdFactorial);

}  // namespace
BENCHMARK_MAIN();
