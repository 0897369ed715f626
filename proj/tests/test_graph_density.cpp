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

Mask edge(int x, int y) { return bit(x) | bit(y); }

// a=0, b=1, x1..x5 = 2..6.
std::vector<Mask> escape_graph_edges() {
  return {edge(0, 1), edge(2, 0), edge(3, 0), edge(4, 0), edge(4, 1), edge(5, 1), edge(5, 6)};
}

std::vector<Mask> cycle(int n) {
  std::vector<Mask> e;
  for (int i = 0; i < n; ++i) e.push_back(edge(i, (i + 1) % n));
  return e;
}

struct Instance {
  SetFamily f;
  std::vector<Mask> gens;
  Mask u = 0;
};

// Random graph with a few loops; U is a 2-point generator.
std::optional<Instance> random_instance(std::mt19937_64& rng, int n, double p_edge, double p_loop) {
  std::bernoulli_distribution e(p_edge), l(p_loop);
  std::vector<Mask> gens;
  for (int i = 0; i < n; ++i) {
    if (l(rng)) gens.push_back(bit(i));
    for (int j = i + 1; j < n; ++j)
      if (e(rng)) gens.push_back(edge(i, j));
  }
  if (gens.empty()) return std::nullopt;
  SetFamily f = graph_family(n, gens);
  std::vector<Mask> pairs;
  for (Mask g : nonempty_generators(f))
    if (popcount(g) == 2) pairs.push_back(g);
  if (pairs.empty()) return std::nullopt;
  return Instance{f, nonempty_generators(f), pairs[rng() % pairs.size()]};
}

Rational direct_density(const SetFamily& f, Mask u) {
  std::size_t above = 0;
  for (Mask m : f) above += oracle::sub(u, m);
  return Rational(above) / Rational(f.size());
}

}  // namespace

TEST_CASE("escape-graph family reproduces its worked values") {
  SetFamily f = graph_family(7, escape_graph_edges());
  const Mask u = edge(0, 1);
  CHECK(f.size() == 45);
  CHECK(escape_set(f, u, bit(5) | bit(6)).members() == std::vector<Mask>{0, 2, 3});
  CHECK(escape_set(f, u, bit(4)).members() == std::vector<Mask>{1, 2, 3});
  CHECK(escape_set(f, u, bit(2) | bit(5)).members() == std::vector<Mask>{3});
  auto nb = neighborhoods(f, u);
  CHECK(nb.n == 0b0111111);
  CHECK(nb.n2 == 0b1111111);
  CHECK(pi_closure(f, bit(2) | bit(0)) == 0b101);
  CHECK(pi_closure(f, bit(6)) == 0);
  CHECK(isolated(f, bit(6)) == bit(6));
  CHECK(mu(f, f, u) == Rational(15, 8));
  auto ex = min_mu_over_extensions(f, u, MuSearch::kExhaustive);
  auto pa = min_mu_over_extensions(f, u, MuSearch::kParametric);
  CHECK(ex.value == Rational(3, 2));
  CHECK(pa.value == Rational(3, 2));
  CHECK(nu_lower_bound(f, u).value == Rational(3, 2));
  auto md = min_degree_density_check(f, u);
  CHECK_FALSE(md.hypotheses);
  CHECK(md.violating_edge == std::optional<Mask>(edge(0, 2)));
  CHECK(md.direct_density == Rational(8, 15));
}

TEST_CASE("escape sets match the definition on random graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    auto inst = random_instance(rng, 3 + static_cast<int>(rng() % 5), 0.4, 0.1);
    if (!inst) continue;
    const Mask rest = inst->f.ground_mask() & ~inst->u;
    for (Mask x = rest;; x = (x - 1) & rest) {
      auto e = escape_set(inst->f, inst->u, x);
      REQUIRE(e.members() == oracle::escape(inst->gens, inst->u, x));
      REQUIRE(escape_set_by_generators(inst->f, inst->u, x) == e);
      if (x == 0) break;
    }
  }
}

TEST_CASE("graph families are union-closed with the empty set") {
  SetFamily f = graph_family(5, cycle(5));
  CHECK(f.size() == 17);
  CHECK(f.contains(0));
  CHECK(oracle::union_closed(f.members()));
  CHECK(f.members() == oracle::union_closure([] { auto e = cycle(5); e.push_back(0); return e; }()));
  CHECK_THROWS_AS(graph_family(4, {0b111}), InputError);
}

TEST_CASE("extensions") {
  SetFamily f = graph_family(4, {edge(0, 1), edge(1, 2)});
  const Mask u = edge(0, 1);
  SetFamily h(4, {bit(3)});
  SetFamily fp = family_join(f, SetFamily(4, {0, bit(3)}));
  CHECK(is_extension(f, u, fp));
  CHECK(is_extension(f, u, f));
  CHECK_FALSE(is_extension(f, u, SetFamily(4, {0, 3})));
  CHECK_THROWS_AS(mu(f, SetFamily(4, {0, 3}), u), InputError);
  CHECK(family_join(f, h).size() == f.size());
}

TEST_CASE("parametric and exhaustive minimum agree") {
  std::mt19937_64 rng(43);
  std::size_t compared = 0;
  for (int t = 0; t < 400 && compared < 80; ++t) {
    auto inst = random_instance(rng, 4 + static_cast<int>(rng() % 4), 0.35, 0.1);
    if (!inst) continue;
    auto nb = neighborhoods(inst->f, inst->u);
    if (popcount(nb.n2 & ~inst->u) > 5) continue;
    auto ex = min_mu_over_extensions(inst->f, inst->u, MuSearch::kExhaustive);
    auto pa = min_mu_over_extensions(inst->f, inst->u, MuSearch::kParametric);
    REQUIRE(ex.value == pa.value);
    REQUIRE(ex.value <= mu(inst->f, inst->f, inst->u));
    ++compared;
  }
  CHECK(compared >= 40);
}

TEST_CASE("nu bound against the restricted exhaustive minimum") {
  std::mt19937_64 rng(47);
  std::size_t compared = 0;
  for (int t = 0; t < 600 && compared < 60; ++t) {
    auto inst = random_instance(rng, 4 + static_cast<int>(rng() % 4), 0.35, 0.0);
    if (!inst) continue;
    auto nb = neighborhoods(inst->f, inst->u);
    if (popcount(nb.n2 & ~inst->u) > 5) continue;
    auto nu = nu_lower_bound(inst->f, inst->u);
    auto md = min_degree_density_check(inst->f, inst->u);
    if (md.hypotheses) REQUIRE(nu.value >= 2);
    auto restricted = min_mu_over_extensions(inst->f, inst->u, MuSearch::kExhaustive, true);
    if (!restricted.found) continue;
    REQUIRE(nu.value <= restricted.value);
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("min-degree certificate on edge-transitive graphs") {
  std::vector<Mask> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.push_back(edge(i, j));
  std::vector<Mask> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.push_back(edge(i, (i + 1) % 5));
    petersen.push_back(edge(i, i + 5));
    petersen.push_back(edge(5 + i, 5 + (i + 2) % 5));
  }
  for (const auto& [n, edges] : {std::pair{5, cycle(5)}, std::pair{6, cycle(6)}, std::pair{4, k4}, std::pair{10, petersen}}) {
    SetFamily f = graph_family(n, edges);
    const Mask u = edges.front();
    auto md = min_degree_density_check(f, u);
    CHECK(md.hypotheses);
    CHECK(md.certified);
    CHECK(md.consistent);
    CHECK(md.direct_density == direct_density(f, u));
    CHECK(md.direct_density <= Rational(1, 2));
    CHECK(nu_lower_bound(f, u).value >= 2);
  }
  CHECK(min_degree_bound(1, 1) == Rational(2));
}

TEST_CASE("element densities of union-closed families") {
  auto d = ucsc_brute(union_closure(SetFamily(3, {0, 1, 6})));
  CHECK(d.holds);
  CHECK(d.max_density >= Rational(1, 2));
  for (int dom = 1; dom <= 4; ++dom) {
    auto s = ucsc_sweep(dom);
    CHECK(s.instances == oracle::union_closed_classes(dom));
    CHECK(s.violations == 0);
  }
  CHECK(ucsc_sweep(4).instances == 362);
}
