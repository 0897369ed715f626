//  Copyright 2026 The orderkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include "orderkit/orderkit.hpp"

namespace ok = orderkit;

namespace {

ok::Mask edge(int x, int y) { return ok::bit(x) | ok::bit(y); }

void BM_Width(benchmark::State& state) {
  ok::Poset p = ok::layered_antichains_poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ok::width(p).width);
  state.SetComplexityN(static_cast<std::int64_t>(p.size()));
}
BENCHMARK(BM_Width)->DenseRange(4, 10, 2)->Complexity();

void BM_CountOrderMaps(benchmark::State& state) {
  ok::Semilattice l = ok::boolean_lattice(static_cast<int>(state.range(0)));
  ok::Poset p = ok::Poset::antichain(2);
  for (auto _ : state) benchmark::DoNotOptimize(ok::count_order_maps(p, l.order()));
}
BENCHMARK(BM_CountOrderMaps)->DenseRange(2, 5);

void BM_LocallyKWide(benchmark::State& state) {
  ok::SetFamily f = ok::short_arcs_family(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ok::is_locally_k_wide(f, 3));
}
BENCHMARK(BM_LocallyKWide)->RangeMultiplier(2)->Range(8, 32);

void BM_MaxSearchLocally2Wide(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ok::max_search(ok::SearchClass::kAll, 2, 4).max_size);
}
BENCHMARK(BM_MaxSearchLocally2Wide)->Unit(benchmark::kMillisecond);

void BM_MatchingDecider(benchmark::State& state) {
  ok::Semilattice l = ok::pentagon_lattice();
  ok::Poset p = ok::Poset::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ok::decide_matching_property(l, p, ok::MatchKind::kFull, ok::Direction::kDecreasing).holds);
}
BENCHMARK(BM_MatchingDecider)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Zeta(benchmark::State& state) {
  ok::Poset p = ok::layered_antichains_poset(4);
  for (auto _ : state) benchmark::DoNotOptimize(ok::zeta(p, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Zeta)->DenseRange(2, 8, 3);

// Exhaustive filter enumeration against the parametric min-cut on the
// escape-graph family.
void BM_MinMu(benchmark::State& state) {
  ok::SetFamily f = ok::graph_family(7, {edge(0, 1), edge(2, 0), edge(3, 0), edge(4, 0), edge(4, 1), edge(5, 1), edge(5, 6)});
  const auto method = state.range(0) == 0 ? ok::MuSearch::kExhaustive : ok::MuSearch::kParametric;
  state.SetLabel(state.range(0) == 0 ? "exhaustive" : "parametric");
  for (auto _ : state) benchmark::DoNotOptimize(ok::min_mu_over_extensions(f, edge(0, 1), method).value);
}
BENCHMARK(BM_MinMu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinMuPetersen(benchmark::State& state) {
  std::vector<ok::Mask> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(edge(i, (i + 1) % 5));
    e.push_back(edge(i, i + 5));
    e.push_back(edge(5 + i, 5 + (i + 2) % 5));
  }
  ok::SetFamily f = ok::graph_family(10, e);
  for (auto _ : state) benchmark::DoNotOptimize(ok::min_mu_over_extensions(f, e.front()).value);
}
BENCHMARK(BM_MinMuPetersen)->Unit(benchmark::kMillisecond);

void BM_UcscSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ok::ucsc_sweep(static_cast<int>(state.range(0))).instances);
}
BENCHMARK(BM_UcscSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
