// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "voxgen/generators.hpp"
#include "voxgen/query.hpp"
#include "voxgen/rasterizer.hpp"

namespace {

using namespace voxgen;

const WorldModel& dungeon_world(int n) {
  static std::map<int, WorldModel> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    DungeonParams p;
    p.n = n;
    p.seed = 1;
    it = cache.emplace(n, gen_dungeon(p)).first;
  }
  return it->second;
}

void BM_RasterizeParallel(benchmark::State& state) {
  const WorldModel& w = dungeon_world(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(w));
}

void BM_RasterizeSerial(benchmark::State& state) {
  const WorldModel& w = dungeon_world(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize_serial(w));
}

std::vector<Position> sample_points(const SemanticMap& m, std::size_t count) {
  Box ext = m.locations.front().bounds;
  for (const auto& l : m.locations) ext = hull(ext, l.bounds);
  std::mt19937_64 gen(9);
  auto pick = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(gen); };
  std::vector<Position> pts(count);
  for (auto& p : pts)
    p = {pick(ext.top_left.x, ext.bottom_right.x), pick(ext.top_left.y, ext.bottom_right.y),
         pick(ext.top_left.z, ext.bottom_right.z)};
  return pts;
}

template <bool Parallel>
void BM_Locate(benchmark::State& state) {
  const SemanticMap m = build_semantic_map(dungeon_world(32));
  const LocationIndex idx(m);
  const auto pts = sample_points(m, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(locate_batch(idx, pts));
    } else {
      benchmark::DoNotOptimize(locate_batch_serial(idx, pts));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_RasterizeParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RasterizeSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Locate<true>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Locate<false>)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
