#include <benchmark/benchmark.h>

#include <random>

#include "cy4gv/cy4gv.hpp"

using namespace cy4gv;

namespace {

const GeometryData& geometry(const std::string& name) {
  static std::map<std::string, GeometryData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_geometry(std::string(CY4GV_FIXTURE_DIR) + "/" + name + ".json")).first;
  return it->second;
}

void BM_MeetingTableLocalP1P1(benchmark::State& state) {
  const auto& g = geometry("local_p1p1");
  for (auto _ : state) benchmark::DoNotOptimize(meeting_table(g, state.range(0)));
}
BENCHMARK(BM_MeetingTableLocalP1P1)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MeetingTableElliptic(benchmark::State& state) {
  const auto& g = geometry("elliptic_p3");
  for (auto _ : state) benchmark::DoNotOptimize(meeting_table(g));
}
BENCHMARK(BM_MeetingTableElliptic)->Unit(benchmark::kMillisecond);

void BM_LocalP3Pipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(local_p3_model().tau1({Rational(1)}));
}
BENCHMARK(BM_LocalP3Pipeline)->Unit(benchmark::kMillisecond);

void BM_LocalP2Pipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(local_p2_model(3).tau1({Rational(1)}));
}
BENCHMARK(BM_LocalP2Pipeline)->Unit(benchmark::kMillisecond);

void BM_RingMultiply(benchmark::State& state) {
  const auto r = chow::Ring::product({4, 3, 3});
  const auto x = (r->one() + r->linear(std::vector<std::int64_t>{1, -2, 3})).pow(5);
  const auto y = (r->one() + r->linear(std::vector<std::int64_t>{2, 1, -1})).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RingMultiply);

void BM_GenusZeroInversion(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> v(-100, 100);
  GVTable t{0, {1, 1}, bound, {}};
  for (const auto& beta : effective_classes({1, 1}, bound)) t.entries[beta] = Rational(v(rng));
  const auto series = gw0_from_gv0(t, bound);
  for (auto _ : state) benchmark::DoNotOptimize(gv0_from_gw0(series));
}
BENCHMARK(BM_GenusZeroInversion)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
