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

#include <random>

#include "oracles.hpp"

using namespace orderkit;

namespace {

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for (auto x : s) m |= bit(static_cast<int>(x));
  return m;
}

Mask up_of(const Poset& p, Mask a) {
  Mask out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if ((a >> i & 1) && p.leq(i, j)) out |= bit(static_cast<int>(j));
  return out;
}

Mask minimal(const Poset& p, Mask s) {
  Mask out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(s >> i & 1)) continue;
    bool min = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if ((s >> j & 1) && p.lt(j, i)) min = false;
    if (min) out |= bit(static_cast<int>(i));
  }
  return out;
}

std::vector<Mask> antichain_masks(const Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s)
    if (oracle::is_antichain(p, s)) out.push_back(s);
  return out;
}

// The unique largest antichain inside the filter it generates.
bool brute_maximal(const Poset& p, Mask a) {
  const Mask f = up_of(p, a);
  for (Mask b : antichain_masks(p))
    if (b != a && oracle::sub(b, f) && std::popcount(b) >= std::popcount(a)) return false;
  return true;
}

Poset random_poset(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.3);
  std::vector<Poset::Cover> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) covers.emplace_back(i, j);
  return Poset::from_covers(n, covers);
}

}  // namespace

TEST_CASE("antichain meet and join agree with filter operations") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 80; ++t) {
    Poset p = random_poset(rng, 2 + rng() % 6);
    auto all = all_antichains(p);
    REQUIRE(all.size() == antichain_masks(p).size());
    for (const auto& a : all)
      for (const auto& b : all) {
        const Mask am = to_mask(a), bm = to_mask(b);
        REQUIRE(to_mask(antichain_meet(p, a, b)) == minimal(p, am | bm));
        REQUIRE(to_mask(antichain_join(p, a, b)) == minimal(p, up_of(p, am) & up_of(p, bm)));
        REQUIRE(filter_leq(p, a, b) == oracle::sub(up_of(p, bm), up_of(p, am)));
      }
  }
  CHECK_THROWS_AS(antichain_meet(Poset::chain(2), {0, 1}, {0}), InputError);
}

TEST_CASE("maximal r-antichains match the definition") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 80; ++t) {
    Poset p = random_poset(rng, 2 + rng() % 6);
    for (const auto& a : all_antichains(p)) {
      const bool expect = brute_maximal(p, to_mask(a));
      INFO("n=", p.size(), " a=", set_to_string(to_mask(a)));
      REQUIRE(is_maximal_r_antichain(p, a) == expect);
      REQUIRE((class_index(p, a) == -1) == expect);
    }
  }
}

TEST_CASE("maximal Sperner antichain") {
  Poset p = layered_antichains_poset(3);
  auto s = maximal_sperner_antichain(p);
  CHECK(s.size() == 3);
  for (const auto& a : maximal_star_antichains(p)) CHECK(filter_leq(p, s, a));
}

TEST_CASE("star union on the layered poset attains w(w+1)/2") {
  for (int w = 1; w <= 4; ++w) {
    Poset p = layered_antichains_poset(w);
    CHECK(star_union(p).size() == static_cast<std::size_t>(w * (w + 1) / 2));
  }
}

TEST_CASE("incomparable sequences") {
  // All r-subsets of a w-antichain form a valid sequence of length C(w, r).
  Poset p = Poset::antichain(4);
  std::vector<ElementSet> seq;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) seq.push_back({i, j});
  auto c = incomparable_sequence_check(p, seq);
  CHECK(c.hypotheses);
  CHECK(c.length == 6);
  CHECK(c.bound == 6);
  CHECK(c.within_bound);
  auto single = incomparable_sequence_check(p, {{0, 1}});
  CHECK(single.hypotheses);
  CHECK(single.within_bound);
  CHECK_FALSE(incomparable_sequence_check(p, {{0, 1}, {0}}).hypotheses);
}

TEST_CASE("Sperner closure") {
  SetFamily f(2, {1, 2, 3});
  CHECK(sperner_closure(f, 0) == 0);
  // A chain above A: its top member is the filter-order maximum.
  CHECK(sperner_closure(f, 1) == 3);
  SetFamily chain(3, {1, 3, 7});
  CHECK(sperner_closure(chain, 2) == 7);
  // No member contains A: the whole union.
  CHECK(sperner_closure(SetFamily(3, {1, 2}), 3) == 3);
  for (const auto& [r, layer] : sc_layers(prefix_point_family(5))) {
    CHECK(r >= 1);
    CHECK(family_width(layer.members()) == layer.size());
  }
}
