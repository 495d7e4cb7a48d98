// Serial reference kernels against the OpenMP versions, on graphs of real lattices.

#include <benchmark/benchmark.h>

#include "unihunt/bv.hpp"
#include "unihunt/neighbor.hpp"

using namespace unihunt;

namespace {

// The rank-29 flagship (928 vertices), D16+ (240 root pairs) and I12 (1024 vertices, loops included).
const Lattice& lattice(int which) {
  static const Lattice ls[] = {
      neighbor(59, [] {
        Vec x(29);
        for (int i = 0; i < 29; ++i) x[i] = i + 1;
        return x;
      }(), 0),
      neighbor(2, Vec(16, 1), 0),
      Lattice::standard(12),
  };
  return ls[which];
}

const std::vector<Vec>& reps(int which) {
  static std::vector<Vec> cache[3];
  if (cache[which].empty()) cache[which] = graph_vertices(lattice(which));
  return cache[which];
}

void BM_AdjacencySerial(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(adjacency_serial(lattice(w).gram(), reps(w)));
  st.counters["vertices"] = static_cast<double>(reps(w).size());
}

void BM_AdjacencyParallel(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(adjacency_parallel(lattice(w).gram(), reps(w)));
  st.counters["vertices"] = static_cast<double>(reps(w).size());
}

void BM_SquareSerial(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  const BitMatrix a = adjacency_parallel(lattice(w).gram(), reps(w));
  for (auto _ : st) benchmark::DoNotOptimize(square_mod_serial(a));
  st.counters["vertices"] = a.size();
}

void BM_SquareParallel(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  const BitMatrix a = adjacency_parallel(lattice(w).gram(), reps(w));
  for (auto _ : st) benchmark::DoNotOptimize(square_mod_parallel(a));
  st.counters["vertices"] = a.size();
}

void BM_BvEndToEnd(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  const bool parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(bv(lattice(w), BvVariant::kSetOfMultisets, parallel));
}

}  // namespace

BENCHMARK(BM_AdjacencySerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BvEndToEnd)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
