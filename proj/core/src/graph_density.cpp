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

#include "orderkit/graph_density.hpp"

#include <algorithm>
#include <deque>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "orderkit/enumerate.hpp"

namespace orderkit {

namespace {

void require_union_closed_with_empty(const SetFamily& f) {
  if (!f.contains(0)) throw InputError("family must contain the empty set");
  if (!is_union_closed(f)) throw InputError("family must be union-closed");
}

Mask closure(const std::vector<Mask>& j, Mask x) {
  Mask out = 0;
  for (Mask v : j) {
    if (subset_of(v, x)) out |= v;
  }
  return out;
}

std::size_t escape_count(const std::vector<Mask>& j, Mask u, Mask x) {
  const Mask full = closure(j, x | u) & ~u;
  std::size_t count = 0;
  Mask y = u;
  while (true) {
    Mask c = closure(j, x | y);
    if ((c & u) == y && subset_of(full, c)) ++count;
    if (y == 0) break;
    y = (y - 1) & u;
  }
  return count;
}

// Bit i of `local` selects the i-th element of `s`.
Mask expand(Mask s, std::uint64_t local) {
  Mask out = 0;
  for (int e : elements_of(s)) {
    if (local & 1) out |= bit(e);
    local >>= 1;
  }
  return out;
}

bool contains_mask(const std::vector<Mask>& v, Mask m) { return std::find(v.begin(), v.end(), m) != v.end(); }

}  // namespace

std::vector<Mask> nonempty_generators(const SetFamily& f) {
  std::vector<Mask> out;
  for (Mask v : generators(f)) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

SetFamily graph_family(int ground, const std::vector<Mask>& edges) {
  std::vector<Mask> members = edges;
  for (Mask e : edges) {
    if (popcount(e) > 2) throw InputError("graph edges have at most 2 points");
  }
  members.push_back(0);
  return union_closure(SetFamily(ground, members));
}

Mask pi_closure(const SetFamily& f, Mask x) { return closure(nonempty_generators(f), x); }

Mask isolated(const SetFamily& f, Mask x) { return x & ~pi_closure(f, x); }

SetFamily family_join(const SetFamily& f, const SetFamily& h) {
  std::vector<Mask> out;
  out.reserve(f.size() * h.size());
  for (Mask a : f) {
    for (Mask b : h) out.push_back(a | b);
  }
  return SetFamily(std::max(f.ground(), h.ground()), out);
}

bool is_extension(const SetFamily& f, Mask u, const SetFamily& f_prime) {
  if (!is_union_closed(f_prime)) return false;
  // Any valid H lies inside the members avoiding U, and joining F with all
  // of them gives back F′ exactly when F′ is an extension.
  std::vector<Mask> h;
  for (Mask v : f_prime) {
    if ((v & u) == 0) h.push_back(v);
  }
  if (h.empty()) return false;
  return family_join(f, SetFamily(f_prime.ground(), h)).members() == f_prime.members();
}

SetFamily escape_set(const SetFamily& f, Mask u, Mask x) {
  require_union_closed_with_empty(f);
  if (x & u) throw InputError("X must be disjoint from U");
  auto j = nonempty_generators(f);
  const Mask full = closure(j, x | u) & ~u;
  std::vector<Mask> out;
  Mask y = u;
  while (true) {
    Mask c = closure(j, x | y);
    if ((c & u) == y && subset_of(full, c)) out.push_back(y);
    if (y == 0) break;
    y = (y - 1) & u;
  }
  return SetFamily(f.ground(), out);
}

SetFamily escape_set_by_generators(const SetFamily& f, Mask u, Mask x) {
  require_union_closed_with_empty(f);
  if (x & u) throw InputError("X must be disjoint from U");
  auto j = nonempty_generators(f);
  auto covered = [&](int e, Mask within) {
    return std::any_of(j.begin(), j.end(), [&](Mask v) { return (v & bit(e)) && subset_of(v, within); });
  };
  std::vector<Mask> out;
  Mask y = u;
  while (true) {
    const Mask xy = x | y;
    bool ok = true;
    for (int e : elements_of(y)) ok = ok && covered(e, xy);
    for (Mask v : j) {
      if (!ok) break;
      if (!subset_of(v & ~u, x)) continue;
      for (int e : elements_of(v & ~u)) ok = ok && covered(e, xy);
    }
    if (ok) out.push_back(y);
    if (y == 0) break;
    y = (y - 1) & u;
  }
  return SetFamily(f.ground(), out);
}

Rational mu(const SetFamily& f, const SetFamily& f_prime, Mask u) {
  require_union_closed_with_empty(f);
  if (!is_extension(f, u, f_prime)) throw InputError("not an extension of (F, U)");
  auto j = nonempty_generators(f);
  SetFamily rest = restrict(f_prime, u, Restriction::kMinus);
  std::uint64_t total = 0;
  for (Mask x : rest) total += escape_count(j, u, x);
  return Rational(total) / Rational(rest.size());
}

Mask neighborhood(const SetFamily& f, Mask x) {
  Mask out = x;
  for (Mask v : nonempty_generators(f)) {
    if (v & x) out |= v;
  }
  return out;
}

Neighborhoods neighborhoods(const SetFamily& f, Mask x) {
  Neighborhoods out;
  out.n = neighborhood(f, x);
  out.n2 = neighborhood(f, out.n);
  return out;
}

namespace {

struct MuProblem {
  Mask s = 0;
  int width = 0;
  std::vector<std::uint64_t> weight;  // |E(X)| by local index
};

MuProblem mu_problem(const SetFamily& f, Mask u, int max_width) {
  require_union_closed_with_empty(f);
  auto j = nonempty_generators(f);
  if (!contains_mask(j, u)) throw InputError("U must be a non-empty generator");
  MuProblem p;
  p.s = neighborhoods(f, u).n2 & ~u;
  p.width = popcount(p.s);
  if (p.width > max_width) throw Refusal("N² ∖ U too large for this search");
  p.weight.resize(std::size_t{1} << p.width);
  for (std::size_t i = 0; i < p.weight.size(); ++i) p.weight[i] = escape_count(j, u, expand(p.s, i));
  return p;
}

Rational ratio_of(const MuProblem& p, const std::vector<std::size_t>& members) {
  std::uint64_t sum = 0;
  for (std::size_t i : members) sum += p.weight[i];
  return Rational(sum) / Rational(members.size());
}

SetFamily witness_of(const MuProblem& p, int ground, const std::vector<std::size_t>& members) {
  std::vector<Mask> out;
  for (std::size_t i : members) out.push_back(expand(p.s, i));
  return SetFamily(ground, out);
}

void offer(MinMu& best, const Rational& value, SetFamily witness) {
  if (!best.found || value < best.value || (value == best.value && witness.members() < best.witness.members())) {
    best.found = true;
    best.value = value;
    best.witness = std::move(witness);
  }
}

MinMu exhaustive(const SetFamily& f, const MuProblem& p, bool only_unit_minimal) {
  std::vector<Mask> all;
  for (std::size_t i = 0; i < p.weight.size(); ++i) all.push_back(i);
  Poset cube = Poset::inclusion(all);
  MinMu best;
  for (Mask filter : filters(cube)) {
    if (filter == 0) continue;
    ++best.filters_examined;
    if (only_unit_minimal) {
      bool ok = true;
      for (int i : elements_of(minimal_of(cube, filter))) ok = ok && p.weight[i] == 1;
      if (!ok) continue;
    }
    std::vector<std::size_t> members;
    for (int i : elements_of(filter)) members.push_back(i);
    offer(best, ratio_of(p, members), witness_of(p, f.ground(), members));
  }
  return best;
}

// Largest-profit up-closed set of the cube, as a max-weight closure.
std::vector<std::size_t> max_profit_filter(const MuProblem& p, const std::vector<BigInt>& profit) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, std::int64_t,
                      boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  const std::size_t n = p.weight.size();
  Graph g(n + 2);
  const std::size_t src = n, sink = n + 1;
  auto cap = boost::get(boost::edge_capacity, g);
  auto rev = boost::get(boost::edge_reverse, g);
  auto res = boost::get(boost::edge_residual_capacity, g);
  auto add = [&](std::size_t a, std::size_t b, std::int64_t c) {
    auto e = boost::add_edge(a, b, g).first;
    auto r = boost::add_edge(b, a, g).first;
    cap[e] = c;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };
  BigInt total = 0;
  for (const auto& v : profit) total += abs(v);
  if (total >= BigInt(std::int64_t{1} << 60)) throw OverflowError("profits too large for min-cut");
  const auto inf = static_cast<std::int64_t>(total) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::int64_t>(profit[i]);
    if (w > 0) add(src, i, w);
    if (w < 0) add(i, sink, -w);
    for (int b = 0; b < p.width; ++b) {
      if (!(i & (std::size_t{1} << b))) add(i, i | (std::size_t{1} << b), inf);
    }
  }
  boost::push_relabel_max_flow(g, src, sink);
  std::vector<bool> seen(n + 2, false);
  std::deque<std::size_t> queue{src};
  seen[src] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto [e, end] = boost::out_edges(v, g); e != end; ++e) {
      std::size_t w = boost::target(*e, g);
      if (!seen[w] && res[*e] > 0) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

MinMu parametric(const SetFamily& f, const MuProblem& p) {
  // Dinkelbach iteration: each round finds the filter minimising
  // Σ (|E(X)| − λ) and stops when no filter has negative total.
  std::vector<std::size_t> current(p.weight.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;
  Rational lambda = ratio_of(p, current);
  MinMu out;
  while (true) {
    ++out.filters_examined;
    const BigInt num = numerator(lambda), den = denominator(lambda);
    std::vector<BigInt> profit(p.weight.size());
    for (std::size_t i = 0; i < profit.size(); ++i) profit[i] = num - den * p.weight[i];
    auto h = max_profit_filter(p, profit);
    BigInt gain = 0;
    for (std::size_t i : h) gain += profit[i];
    if (h.empty() || gain <= 0) break;
    current = std::move(h);
    lambda = ratio_of(p, current);
  }
  out.found = true;
  out.value = lambda;
  out.witness = witness_of(p, f.ground(), current);
  return out;
}

}  // namespace

MinMu min_mu_over_extensions(const SetFamily& f, Mask u, MuSearch method, bool only_unit_minimal) {
  if (method == MuSearch::kExhaustive) return exhaustive(f, mu_problem(f, u, 5), only_unit_minimal);
  if (only_unit_minimal) throw InputError("the unit-minimal restriction applies to the exhaustive search");
  return parametric(f, mu_problem(f, u, 12));
}

SetFamily escape_filter(const SetFamily& f, Mask u, Mask y, int x) {
  require_union_closed_with_empty(f);
  auto j = nonempty_generators(f);
  const Mask s = neighborhoods(f, u).n2 & ~u;
  if (popcount(s) > 20) throw Refusal("N² ∖ U too large to list");
  std::vector<Mask> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << popcount(s)); ++i) {
    const Mask xs = expand(s, i);
    const Mask reach = xs | y | bit(x);
    bool ok = std::any_of(j.begin(), j.end(), [&](Mask v) {
      return popcount(v) <= 2 && (v & bit(x)) && subset_of(v, reach);
    });
    if (ok) out.push_back(xs);
  }
  return SetFamily(f.ground(), out);
}

namespace {

struct EdgeView {
  std::vector<Mask> j;
  int a = 0, b = 0;
  Mask u = 0, n = 0, n2 = 0;
  bool edge(int x, int y) const { return contains_mask(j, bit(x) | bit(y)); }
};

EdgeView edge_view(const SetFamily& f, Mask u) {
  require_union_closed_with_empty(f);
  EdgeView v;
  v.j = nonempty_generators(f);
  if (popcount(u) != 2 || !contains_mask(v.j, u)) throw InputError("U must be a 2-element generator");
  v.u = u;
  v.a = std::countr_zero(u);
  v.b = 63 - std::countl_zero(u);
  auto nb = neighborhoods(f, u);
  v.n = nb.n;
  v.n2 = nb.n2;
  return v;
}

}  // namespace

NuBound nu_lower_bound(const SetFamily& f, Mask u) {
  EdgeView v = edge_view(f, u);
  for (Mask g : v.j) {
    if ((g & v.n) && popcount(g) > 2) throw InputError("generators meeting N(U) must be edges");
  }
  NuBound out;
  const Mask outer = v.n & ~u;
  for (int x : elements_of(outer)) {
    bool ea = v.edge(x, v.a), eb = v.edge(x, v.b);
    if (ea && eb) out.n_ab |= bit(x);
    else if (ea) out.n_a |= bit(x);
    else if (eb) out.n_b |= bit(x);
    std::size_t count = 0;
    for (int y : elements_of(v.n2 & ~u)) {
      if (y != x && v.edge(x, y)) ++count;
    }
    out.n_of_x[x] = count;
  }
  out.value = 1;
  for (Mask y : {Mask{0}, bit(v.a), bit(v.b)}) {
    Rational prod = 1;
    for (int x : elements_of(outer)) {
      bool fixed = contains_mask(v.j, bit(x));
      for (int z : elements_of(y)) fixed = fixed || v.edge(x, z);
      Rational nu = 1;
      if (!fixed) nu = 1 - Rational(1) / Rational(BigInt(1) << out.n_of_x[x]);
      out.nu[{y, x}] = nu;
      prod *= nu;
    }
    out.value += prod;
  }
  return out;
}

Rational min_degree_bound(std::size_t n_a, std::size_t n_b) {
  const Rational ha = Rational(1) / Rational(BigInt(1) << n_a);
  const Rational hb = Rational(1) / Rational(BigInt(1) << n_b);
  Rational c1 = 1, c2 = 1;
  for (std::size_t i = 0; i < n_b; ++i) c1 *= 1 - ha;
  for (std::size_t i = 0; i < n_a; ++i) c2 *= 1 - hb;
  return 1 + c1 + c2;
}

MinDegreeCheck min_degree_density_check(const SetFamily& f, Mask u,
                                        const std::optional<std::vector<Mask>>& simple_graph) {
  EdgeView v = edge_view(f, u);
  std::vector<Mask> g2;
  if (simple_graph) {
    for (Mask e : *simple_graph) {
      if (popcount(e) != 2 || !contains_mask(v.j, e)) {
        throw InputError("the simple graph must consist of 2-element generators");
      }
    }
    g2 = *simple_graph;
  } else {
    for (Mask e : v.j) {
      if (popcount(e) == 2) g2.push_back(e);
    }
  }
  auto degree = [&](Mask e) {
    return std::count_if(g2.begin(), g2.end(), [&](Mask w) { return w != e && (w & e); });
  };
  MinDegreeCheck out;
  SetFamily above = restrict(f, u, Restriction::kSupersetOf);
  out.direct_density = Rational(above.size()) / Rational(f.size());
  out.hypotheses = contains_mask(g2, u);
  if (!out.hypotheses) out.violating_edge = u;
  for (Mask e : v.j) {
    if (!out.hypotheses) break;
    if (!(e & u) || e == u) continue;
    if (popcount(e) > 2 || (popcount(e) == 2 && (!contains_mask(g2, e) || degree(e) < degree(u)))) {
      out.hypotheses = false;
      out.violating_edge = e;
    }
  }
  for (Mask e : g2) {
    if (!(e & u) || e == u) continue;
    const int x = std::countr_zero(e & ~u);
    const bool ea = contains_mask(g2, bit(x) | bit(v.a)), eb = contains_mask(g2, bit(x) | bit(v.b));
    if (ea && !eb) ++out.n_a;
    if (eb && !ea) ++out.n_b;
  }
  // With n_a or n_b zero no filter meets the side conditions, so μ ≥ 2 holds vacuously.
  out.bound = (out.n_a == 0 || out.n_b == 0) ? Rational(2) : min_degree_bound(out.n_a, out.n_b);
  out.certified = out.hypotheses && out.bound >= 2;
  out.consistent = !out.certified || out.direct_density * 2 <= 1;
  return out;
}

ElementDensity ucsc_brute(const SetFamily& f) {
  if (f.size() < 2) throw InputError("needs at least two members");
  if (!is_union_closed(f)) throw InputError("family must be union-closed");
  ElementDensity out;
  for (int x : elements_of(f.union_all())) {
    std::size_t c = std::count_if(f.begin(), f.end(), [&](Mask m) { return m & bit(x); });
    Rational d = Rational(c) / Rational(f.size());
    if (out.min_x < 0 || d < out.min_density) {
      out.min_density = d;
      out.min_x = x;
    }
    if (out.max_x < 0 || d > out.max_density) {
      out.max_density = d;
      out.max_x = x;
    }
  }
  out.holds = out.max_x >= 0 && out.max_density * 2 >= 1;
  return out;
}

UcscSweep ucsc_sweep(int max_domain) {
  UcscSweep out;
  for (const SetFamily& f : closed_families_up_to_iso(max_domain, Closure::kUnion)) {
    if (f.size() < 2) continue;
    ++out.instances;
    if (!ucsc_brute(f).holds) ++out.violations;
  }
  return out;
}

}  // namespace orderkit
