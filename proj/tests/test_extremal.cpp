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

#include <doctest.h>

#include "oracles.hpp"

using namespace orderkit;

namespace {

// Largest family of sets from `pool` satisfying `ok`, by trying every
// subfamily.
std::size_t brute_max(const std::vector<Mask>& pool, int ground, const std::function<bool(const SetFamily&)>& ok) {
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << pool.size()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= best) continue;
    std::vector<Mask> m;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (s >> i & 1) m.push_back(pool[i]);
    if (ok(SetFamily(ground, m))) best = m.size();
  }
  return best;
}

std::vector<Mask> all_subsets(int n) {
  std::vector<Mask> v;
  for (Mask s = 0; s < (Mask{1} << n); ++s) v.push_back(s);
  return v;
}

}  // namespace

TEST_CASE("constructor sizes follow their closed forms") {
  for (int n = 1; n <= 8; ++n) CHECK(prefix_point_family(n).size() == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 2; n <= 8; ++n) CHECK(end_segments_family(n).size() == static_cast<std::size_t>(3 * n - 3));
  for (int k = 1; k <= 7; ++k)
    for (int n = k + 1; n <= 8; ++n) CHECK(prefix_window_family(k, n).size() == static_cast<std::size_t>((k + 1) * n - k * (k + 1) / 2));
  for (int k = 1; k <= 8; ++k)
    for (int n = k; n <= 8; ++n) CHECK(short_arcs_family(k, n).size() == static_cast<std::size_t>(2 * k * n - k * k - k + 2));
  CHECK(prefix_window_family(2, 5).size() == 12);
}

TEST_CASE("constructors satisfy their predicates") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(oracle::centered(prefix_point_family(n)));
    CHECK(oracle::centered(end_segments_family(n)));
    for (Mask m : end_segments_family(n)) CHECK(is_segment(m));
    for (int k = 1; k < n; ++k) {
      CHECK(is_pseudotree(prefix_window_family(k, n), k));
      CHECK(oracle::locally_k_wide(prefix_window_family(k, n), k));
    }
    for (int k = 1; k <= n; ++k) {
      CHECK(oracle::locally_k_wide(short_arcs_family(k, n), k));
      CHECK(oracle::locally_k_wide(short_segments_family(k, n), k));
    }
    for (int k = 2; k <= 4; ++k) CHECK(oracle::locally_k_wide(layered_segments_family(k, n), k));
    CHECK(oracle::locally_k_wide(sixfold_family(n), 4));
  }
}

TEST_CASE("segments maximum against exhaustive search") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Mask> pool{0};
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) pool.push_back(segment(i, j));
    for (int k = 1; k <= 2; ++k) {
      auto expect = brute_max(pool, n, [&](const SetFamily& f) { return oracle::locally_k_wide(f, k); });
      CHECK(segments_max(k, n) == expect);
      CHECK(short_segments_family(k, n).size() == expect);
    }
  }
}

TEST_CASE("max_search against exhaustive search on small grounds") {
  CHECK(max_search(SearchClass::kCentered, std::nullopt, 3).max_size ==
        brute_max(all_subsets(3), 3, [](const SetFamily& f) { return oracle::centered(f); }));
  CHECK(max_search(SearchClass::kCentered, std::nullopt, 3).max_size == 6);
  for (int k = 1; k <= 3; ++k) {
    auto expect = brute_max(all_subsets(3), 3, [&](const SetFamily& f) { return oracle::locally_k_wide(f, k); });
    auto got = max_search(SearchClass::kAll, k, 3);
    CHECK(got.max_size == expect);
    CHECK(oracle::locally_k_wide(got.witness, k));
  }
  CHECK(max_search(SearchClass::kAll, 2, 3).max_size == 8);
  CHECK(max_search(SearchClass::kAll, 2, 4).max_size == 12);
}

TEST_CASE("max_search refuses an exhausted budget") {
  CHECK_THROWS_AS(max_search(SearchClass::kAll, 2, 4, 10), Refusal);
}

TEST_CASE("bound formulas") {
  auto b = bound(BoundClass::kPseudotree, 2, 5);
  CHECK(b.bound == 12);
  CHECK(bound(BoundClass::kCentered, 0, 6).bound == 21);
  CHECK(bound(BoundClass::kCenteredSegments, 0, 6).bound == 15);
  CHECK(bound(BoundClass::kArcs, 2, 7).bound >= short_arcs_family(2, 7).size());
  auto g = bound(BoundClass::kGeneral, 2, 10);
  CHECK(g.bound == 40);
  auto lg = bound(BoundClass::kGeneralLog, 2, 10);
  CHECK(lg.log_lo <= lg.log_hi);
  CHECK_THROWS_AS(bound(BoundClass::kPseudotree, 5, 3), InputError);
  CHECK(parse_bound_class(bound_class_name(BoundClass::kArcs)) == BoundClass::kArcs);
  CHECK_THROWS_AS(parse_bound_class("nonsense"), InputError);
}

TEST_CASE("general local-width bound never violated") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2; n <= 8; ++n) {
      const auto cap = bound(BoundClass::kGeneral, k, n).bound;
      CHECK(short_arcs_family(std::min(k, n), n).size() <= cap);
      CHECK(layered_segments_family(k, n).size() <= cap);
      if (k >= 4) CHECK(sixfold_family(n).size() <= cap);
    }
}

TEST_CASE("left-overlap reduction of short arcs") {
  for (int n = 2; n <= 8; ++n) {
    auto r = left_overlap_reduction(short_arcs_family(2, n));
    CHECK(oracle::locally_k_wide(r.reduced, 1));
    CHECK(oracle::locally_k_wide(r.overlaps, 1));
    CHECK(r.surjective);
  }
  CHECK_THROWS_AS(left_overlap_reduction(SetFamily(5, {0b10101})), InputError);
}

TEST_CASE("layered antichain poset") {
  for (int w = 1; w <= 5; ++w) {
    Poset p = layered_antichains_poset(w);
    CHECK(p.size() == static_cast<std::size_t>(w * (w + 1) / 2));
    CHECK(oracle::width(p) == static_cast<std::size_t>(w));
  }
}
