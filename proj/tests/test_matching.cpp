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

std::vector<Poset> small_posets(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& p : posets_up_to_iso(n)) out.push_back(p);
  return out;
}

Poset antichain_under_top(std::size_t k) {
  std::vector<Poset::Cover> covers;
  for (std::size_t i = 0; i < k; ++i) covers.emplace_back(i, k);
  return Poset::from_covers(k + 1, covers);
}

}  // namespace

TEST_CASE("type counts of the diamond powers") {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 3}}) {
    Semilattice l = m_hat(n);
    Poset p = antichain_under_top(k);
    const std::size_t a = l.atoms().front();
    auto counts = type_counts(l, p, a);
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    CHECK(counts.at(0) == static_cast<std::uint64_t>(n - 1) * checked_pow(2, static_cast<unsigned>(kk)) + 1);
    CHECK(counts.at(bit(k)) == checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(kk)) + 1);
    auto brute = oracle::types(l, p, a);
    for (const auto& [t, maps] : brute) CHECK(counts.at(t) == maps.size());
  }
}

TEST_CASE("boolean powers") {
  for (const auto& p : small_posets(3))
    for (int n = 1; n <= 4; ++n)
      CHECK(count_order_maps(p, boolean_lattice(n).order()) == checked_pow(filter_count(p), static_cast<unsigned>(n)));
}

TEST_CASE("deciders agree with a backtracking oracle") {
  std::vector<Semilattice> lattices;
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto& l : lattices_up_to_iso(n)) lattices.push_back(l);
  lattices.push_back(m_flat(3));
  for (const auto& l : lattices)
    for (const auto& p : small_posets(2)) {
      std::vector<std::size_t> cands = l.join_irreducibles();
      cands.push_back(l.bottom());
      for (std::size_t a : cands)
        for (int kind = 0; kind < 3; ++kind)
          for (bool up : {false, true}) {
            if (up && a == l.bottom()) continue;
            auto d = decide_matching_property(l, p, a, static_cast<MatchKind>(kind),
                                              up ? Direction::kIncreasing : Direction::kDecreasing);
            REQUIRE(d.holds == oracle::matching_property(l, p, a, kind, up));
            for (const auto& m : d.matchings) REQUIRE(validate_matching(l, p, a, m).ok);
          }
    }
}

TEST_CASE("two-element chain has every matching property") {
  Semilattice l = chain_lattice(2);
  for (const auto& p : small_posets(3))
    for (auto kind : {MatchKind::kFull, MatchKind::kTop, MatchKind::kWeak})
      for (auto dir : {Direction::kDecreasing, Direction::kIncreasing})
        CHECK(decide_matching_property(l, p, kind, dir).holds);
}

TEST_CASE("pentagon lattice: top property fails, weak holds") {
  Semilattice l = pentagon_lattice();
  Poset one = Poset::chain(1);
  for (std::size_t a : l.join_irreducibles()) {
    auto d = decide_matching_property(l, one, a, MatchKind::kTop, Direction::kDecreasing);
    CHECK_FALSE(d.holds);
    CHECK_FALSE(d.hall_violator.empty());
    // Hall certificate: the violator has fewer partners below it than members.
    auto targets = oracle::types(l, one, a).at(d.fail_to);
    std::size_t partners = 0;
    for (const auto& g : targets) {
      bool below_some = false;
      for (const auto& f : d.hall_violator) below_some = below_some || l.leq(g[0], f[0]);
      partners += below_some;
    }
    CHECK(partners < d.hall_violator.size());
  }
  CHECK(decide_matching_property(l, one, MatchKind::kWeak, Direction::kDecreasing).holds);
}

TEST_CASE("diamonds fail the upward weak property") {
  for (int n : {3, 4})
    for (const auto& p : small_posets(2))
      CHECK_FALSE(decide_matching_property(m_hat(n), p, MatchKind::kWeak, Direction::kIncreasing).holds);
}

TEST_CASE("full implies top implies weak") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& l : lattices_up_to_iso(n))
      for (const auto& p : small_posets(3))
        for (std::size_t a : l.join_irreducibles())
          for (auto dir : {Direction::kDecreasing, Direction::kIncreasing}) {
            const bool f = decide_matching_property(l, p, a, MatchKind::kFull, dir).holds;
            const bool t = decide_matching_property(l, p, a, MatchKind::kTop, dir).holds;
            const bool w = decide_matching_property(l, p, a, MatchKind::kWeak, dir).holds;
            REQUIRE((!f || t));
            REQUIRE((!t || w));
          }
}

TEST_CASE("lower semimodular coatom matchings") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& l : lattices_up_to_iso(n)) {
      if (!is_lower_semimodular(l)) continue;
      for (const auto& p : small_posets(2))
        for (std::size_t c : l.coatoms())
          for (std::size_t a : l.join_irreducibles()) {
            if (l.leq(a, c)) continue;
            for (Mask f : filters(p)) {
              auto m = matching_lsm(l, c, a, p, f);
              REQUIRE(validate_matching(l, p, a, m).ok);
              REQUIRE(is_a_invertible(l, a, m));
              ++checked;
            }
          }
    }
  CHECK(checked > 0);
  CHECK_THROWS_AS(matching_lsm(boolean_lattice(2), 3, 1, Poset::chain(1), 1), InputError);
}

TEST_CASE("geometric and dual geometric chains") {
  for (const auto& l : {boolean_lattice(3), m_hat(4)})
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t a = l.atoms().front();
      auto steps = matching_geometric(l, a, n);
      CHECK(steps.size() == n);
      for (const auto& m : steps) {
        CHECK(validate_matching(l, Poset::chain(n), a, m).ok);
        CHECK(is_a_invertible(l, a, m));
      }
      auto whole = chain_composite(steps, 1, n + 1);
      CHECK(validate_matching(l, Poset::chain(n), a, whole).ok);
    }
  for (const auto& l : {boolean_lattice(3), m_hat(4).dual(), chain_lattice(3)}) {
    if (!is_dual_geometric(l)) continue;
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t a : l.join_irreducibles()) {
        auto steps = matching_dual_geometric(l, a, n);
        bool all_ok = true;
        for (const auto& m : steps) all_ok = all_ok && validate_matching(l, Poset::chain(n), a, m).ok;
        CHECK(all_ok);
        CHECK(decide_matching_property(l, Poset::chain(n), a, MatchKind::kFull, Direction::kDecreasing).holds);
      }
  }
  CHECK_THROWS_AS(matching_geometric(pentagon_lattice(), 1, 2), InputError);
}

TEST_CASE("matching transfers") {
  Semilattice l = boolean_lattice(2);
  Poset p = Poset::chain(1);
  const std::size_t a = l.atoms().front();
  auto d = decide_matching_property(l, p, a, MatchKind::kFull, Direction::kDecreasing);
  REQUIRE(d.holds);
  REQUIRE_FALSE(d.matchings.empty());
  const Matching& sigma = d.matchings.front();

  Poset pq = disjoint_union(p, p);
  Matching s = matching_sum(sigma, sigma, p.size());
  CHECK(validate_matching(l, pq, a, s).ok);

  Semilattice m = chain_lattice(2);
  Semilattice prod = lattice_product(l, m);
  Matching lifted = lift_product(l, m, p, sigma);
  CHECK(validate_matching(prod, p, a * m.size() + m.bottom(), lifted).ok);

  ElementList ideal;
  for (std::size_t u = 0; u < l.size(); ++u)
    if (l.leq(u, a)) ideal.push_back(u);
  Matching r = restrict_to_ideal(l, sigma, ideal);
  CHECK(validate_matching(l, p, a, r, ideal).ok);

  auto steps = matching_geometric(boolean_lattice(3), 1, 2);
  Matching c = compose(steps[0], steps[1]);
  CHECK(c.from == steps[0].from);
  CHECK(c.to == steps[1].to);
  CHECK(validate_matching(boolean_lattice(3), Poset::chain(2), 1, c).ok);
  CHECK_THROWS_AS(compose(steps[1], steps[0]), InputError);
}
