#include <random>

#include <benchmark/benchmark.h>

#include "convexa/decision.hpp"
#include "convexa/realize2d.hpp"
#include "convexa/verifier2d.hpp"

using namespace convexa;

namespace {

std::vector<Ring> figure5_rings() {
  std::vector<Codeword> words;
  for (const char* w : {"1356", "123", "124", "12", "13", "23", "24", "5", "6"}) words.push_back(parse_codeword(w, 6));
  const NeuralCode d(6, words);
  return rings_of(realize_plan_2d(d, *decide(d).plan).polygons);
}

std::vector<Ring> random_rings(unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 1000);
  std::vector<Ring> out;
  while (out.size() < count) {
    std::vector<RationalPoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({coord(rng), coord(rng)});
    auto hull = convex_hull(pts);
    if (hull.size() >= 3) out.push_back(std::move(hull));
  }
  return out;
}

void BM_Figure5Parallel(benchmark::State& state) {
  const auto rings = figure5_rings();
  for (auto _ : state) benchmark::DoNotOptimize(realized_code_2d(rings, 6));
}

void BM_Figure5Serial(benchmark::State& state) {
  const auto rings = figure5_rings();
  for (auto _ : state) benchmark::DoNotOptimize(realized_code_2d_serial(rings, 6));
}

void BM_RandomParallel(benchmark::State& state) {
  const auto count = static_cast<unsigned>(state.range(0));
  const auto rings = random_rings(count, 11);
  for (auto _ : state) benchmark::DoNotOptimize(realized_code_2d(rings, count));
}

void BM_RandomSerial(benchmark::State& state) {
  const auto count = static_cast<unsigned>(state.range(0));
  const auto rings = random_rings(count, 11);
  for (auto _ : state) benchmark::DoNotOptimize(realized_code_2d_serial(rings, count));
}

}  // namespace

BENCHMARK(BM_Figure5Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Figure5Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
