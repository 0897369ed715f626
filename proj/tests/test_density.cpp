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

Poset antichain_under_top(std::size_t k) {
  std::vector<Poset::Cover> covers;
  for (std::size_t i = 0; i < k; ++i) covers.emplace_back(i, k);
  return Poset::from_covers(k + 1, covers);
}

}  // namespace

TEST_CASE("filter counts") {
  CHECK(filter_count(Poset::chain(3)) == 4);
  CHECK(filter_count(Poset::antichain(3)) == 8);
  CHECK(filter_count(antichain_under_top(2)) == 5);
}

TEST_CASE("zeta equals a direct multichain count") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : posets_up_to_iso(n))
      for (std::uint64_t m = 0; m <= 4; ++m) REQUIRE(zeta(p, m) == oracle::count_maps(Poset::chain(m + 1), p));
  auto c = chain_counts(Poset::chain(3));
  CHECK(c == std::vector<std::uint64_t>{3, 3, 1});
}

TEST_CASE("P-density and the density property") {
  Semilattice pent = pentagon_lattice();
  auto d1 = density_property(pent, Poset::chain(1));
  CHECK(d1.holds);
  CHECK(d1.density == Rational(7, 17));
  CHECK(density_property(pent, Poset::chain(2)).density == Rational(22, 83));
  CHECK(density_property(pent, Poset::antichain(2)).density == Rational(49, 289));
  // Boolean lattices sit exactly at the threshold.
  auto b = density_property(boolean_lattice(3), Poset::chain(1));
  CHECK(b.holds);
  CHECK(b.density == Rational(1, 2));
  // Direct ratio for one element.
  Semilattice l = m_hat(3);
  const std::size_t a = l.atoms().front();
  std::uint64_t above = 0, total = 0;
  oracle::for_each_map(Poset::chain(2), l.order(), [&](const std::vector<std::size_t>& f) {
    ++total;
    above += l.leq(a, f[0]) && l.leq(a, f[1]);
  });
  CHECK(p_density(l, Poset::chain(2), a) == Rational(above, total));
}

TEST_CASE("density threshold") {
  auto t = density_threshold(pentagon_lattice(), 5);
  CHECK(t.m == std::optional<std::size_t>(1));
  CHECK(t.holds.size() == 5);
}

TEST_CASE("lattice size bounds") {
  CHECK(m_bound(4, 2) == 8);
  CHECK(m_bound_argmax(4, 2) == 3);
  CHECK(m_bound(0, 3) == 1);
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(g_formula(n, 2) == n + 1);
  // δ_k = (p−1)^k when P has a greatest element.
  for (const auto& p : {Poset::chain(1), Poset::chain(2), antichain_under_top(2)}) {
    const std::uint64_t pc = filter_count(p);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(delta(k, p) == BigInt(checked_pow(pc - 1, static_cast<unsigned>(k))));
  }
  const std::uint64_t two_antichain[] = {1, 3, 7, 15, 31};
  for (std::size_t k = 0; k <= 4; ++k) CHECK(delta(k, Poset::antichain(2)) == BigInt(two_antichain[k]));
  CHECK_THROWS_AS(delta(7, Poset::chain(1)), Refusal);
  CHECK_THROWS_AS(m_circ_bound(500, Poset::chain(1)), Refusal);
}

TEST_CASE("multi-lattice bound on the cube") {
  Semilattice l = boolean_lattice(3);
  Poset p = Poset::chain(1);
  std::vector<std::uint64_t> alpha(lattice_maps(l, p).size(), 1);
  auto c = multilattice_bound_check(l, p, alpha, 4);
  CHECK(c.hypothesis);
  CHECK(c.total == 8);
  CHECK(c.bound == 8);
  CHECK(c.conclusion);
  CHECK_FALSE(multilattice_bound_check(l, p, alpha, 3).hypothesis);
}

TEST_CASE("small extrema over semilattices") {
  for (std::uint64_t pc : {2, 3, 4}) {
    Poset p = pc == 2 ? Poset::chain(1) : pc == 3 ? Poset::chain(2) : Poset::antichain(2);
    for (std::uint64_t n = 2; n <= pc; ++n) CHECK(h_small(SmallKind::kHLower, p, n).value == std::optional<std::uint64_t>(pc * pc));
    for (std::uint64_t n = pc - 1; n < 2 * pc - 2; ++n) CHECK(h_small(SmallKind::kHUpper, p, n).value == std::optional<std::uint64_t>(pc));
  }
  for (std::uint64_t n = 1; n <= 4; ++n) CHECK(h_small(SmallKind::kGLower, Poset::chain(1), n).value == std::optional<std::uint64_t>(g_formula(n, 2)));
}
