#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "circlet/contraction.hpp"
#include "circlet/facet.hpp"
#include "circlet/inequality.hpp"
#include "circlet/oracle.hpp"
#include "circlet/separation.hpp"
#include "circlet/subtour.hpp"

using namespace circlet;

static void BM_HeldKarp(benchmark::State& state) {
  const Instance inst(static_cast<int>(state.range(0)));
  const auto c = circlet_coeffs(inst).c;
  const std::vector<Rational> cost(c.begin(), c.end());
  for (auto _ : state) benchmark::DoNotOptimize(min_tour_cost(inst, cost));
}
BENCHMARK(BM_HeldKarp)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveScan(benchmark::State& state) {
  const Instance inst(static_cast<int>(state.range(0)));
  const auto c = circlet_coeffs(inst).c;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_min_cost(inst, c));
}
BENCHMARK(BM_ExhaustiveScan)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_TourEnumeration(benchmark::State& state) {
  const Instance inst(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long long sum = 0;
    for_each_tour(inst, [&](std::span<const Vertex> o) { sum += o[1]; });
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_TourEnumeration)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_FacetCertificate(benchmark::State& state) {
  const Instance inst(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_facet(inst));
}
BENCHMARK(BM_FacetCertificate)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveSeparation(benchmark::State& state) {
  const auto x = half_one_point(Instance(8));
  for (auto _ : state) benchmark::DoNotOptimize(separate(x));
}
BENCHMARK(BM_ExhaustiveSeparation)->Unit(benchmark::kMillisecond);

static void BM_HeuristicSeparation(benchmark::State& state) {
  const auto x = half_one_point(Instance(static_cast<int>(state.range(0))));
  SeparationOptions opt;
  opt.mode = SeparationMode::kHeuristic;
  opt.budget = 16;
  for (auto _ : state) benchmark::DoNotOptimize(separate(x, opt));
}
BENCHMARK(BM_HeuristicSeparation)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_SubtourCheck(benchmark::State& state) {
  const auto x = half_one_point(Instance(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(subtour_feasible(x));
}
BENCHMARK(BM_SubtourCheck)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_DetectAndContract(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<Tour> tours;
  std::vector<Vertex> order(12);
  for (int i = 0; i < 256; ++i) {
    for (int v = 0; v < 12; ++v) order[v] = v + 1;
    std::shuffle(order.begin(), order.end(), rng);
    tours.emplace_back(order);
  }
  for (auto _ : state)
    for (const auto& t : tours)
      for (const auto& h : detect_structures(t))
        if (h.contractible) benchmark::DoNotOptimize(analyze_hit(t, h));
}
BENCHMARK(BM_DetectAndContract)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
