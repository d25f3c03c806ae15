#include <benchmark/benchmark.h>

#include "atomsum/atoms.hpp"
#include "atomsum/decompose.hpp"
#include "atomsum/icg.hpp"
#include "atomsum/numtheory.hpp"
#include "atomsum/oracle.hpp"
#include "atomsum/repcount.hpp"

using atomsum::i64;

static void BM_Factorize(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atomsum::factorize(n));
  }
}
BENCHMARK(BM_Factorize)->Arg(60)->Arg(720720)->Arg(999983)->Arg(1000000007);

static void BM_AtomPartition(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atomsum::atom_partition(n));
  }
}
BENCHMARK(BM_AtomPartition)->Arg(60)->Arg(5040)->Arg(100000);

static void BM_RepCount(benchmark::State& state) {
  const i64 n = state.range(0);
  const auto divs = atomsum::divisors(atomsum::factorize(n));
  for (auto _ : state) {
    i64 total = 0;
    for (i64 a : divs) {
      for (i64 b : divs) total += atomsum::rep_count(n, a, b, 1).count;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_RepCount)->Arg(60)->Arg(5040);

static void BM_RepCountOracle(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atomsum::oracle::brute_force_counts(n, 1, 1));
  }
}
BENCHMARK(BM_RepCountOracle)->Arg(60)->Arg(5040);

static void BM_SumsetDecompose(benchmark::State& state) {
  const i64 n = state.range(0);
  const auto divs = atomsum::divisors(atomsum::factorize(n));
  for (auto _ : state) {
    for (i64 a : divs) {
      for (i64 b : divs) {
        benchmark::DoNotOptimize(atomsum::sumset_decompose(n, a, b));
      }
    }
  }
}
BENCHMARK(BM_SumsetDecompose)->Arg(60)->Arg(720720);

static void BM_DistanceLevels(benchmark::State& state) {
  const i64 n = state.range(0);
  const atomsum::icg::ICGraph g = atomsum::icg::build(n, {1, n / 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(atomsum::icg::distance_levels(g));
  }
}
BENCHMARK(BM_DistanceLevels)->Arg(60)->Arg(5040)->Arg(720720);

static void BM_ExportEdgeList(benchmark::State& state) {
  const i64 n = state.range(0);
  const atomsum::icg::ICGraph g = atomsum::icg::build(n, {1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        atomsum::icg::export_graph(g, atomsum::icg::ExportFormat::edge_list));
  }
}
BENCHMARK(BM_ExportEdgeList)->Arg(60)->Arg(1000);

BENCHMARK_MAIN();
