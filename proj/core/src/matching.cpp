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

#include "orderkit/matching.hpp"

#include <algorithm>
#include <set>

#include "orderkit/bipartite.hpp"

namespace orderkit {

namespace {

void require_candidate(const Semilattice& l, std::size_t a) {
  if (a >= l.size()) throw InputError("element out of range");
  if (a != l.bottom() && !l.is_join_irreducible(a)) throw InputError("element is not join-irreducible");
}

bool is_filter_mask(const Poset& p, Mask f) {
  for (int x : elements_of(f)) {
    if (!subset_of(p.up_mask(static_cast<std::size_t>(x)), f)) return false;
  }
  return subset_of(f, low_bits(static_cast<int>(p.size())));
}

bool pointwise_leq(const Semilattice& l, const OrderMap& f, const OrderMap& g) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!l.leq(f[x], g[x])) return false;
  }
  return true;
}

void sort_pairs(Matching& m) { std::sort(m.pairs.begin(), m.pairs.end()); }

Matching finish(Matching m, const Semilattice& l, const Poset& p, std::size_t a, const ElementList& allowed = {}) {
  sort_pairs(m);
  MatchingCheck check = validate_matching(l, p, a, m, allowed);
  if (!check.ok) throw std::logic_error("constructed matching failed validation: " + check.reason);
  return m;
}

std::vector<OrderMap> maps_of_type(const Semilattice& l, const Poset& p, std::size_t a, Mask type) {
  std::vector<OrderMap> out;
  for (OrderMap& f : lattice_maps(l, p)) {
    if (type_of(l, a, f) == type) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<OrderMap> lattice_maps(const Semilattice& l, const Poset& p, const ElementList& allowed,
                                   std::size_t limit) {
  if (p.size() > 64) throw Refusal("posets above 64 elements are not supported here");
  if (allowed.empty()) return order_maps(p, l.order(), limit);
  std::vector<OrderMap> maps = order_maps(p, l.order().induced(allowed), limit);
  for (OrderMap& f : maps) {
    for (auto& v : f) v = static_cast<std::uint32_t>(allowed[v]);
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

Mask type_of(const Semilattice& l, std::size_t a, const OrderMap& f) {
  Mask t = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (l.leq(a, f[x])) t |= bit(static_cast<int>(x));
  }
  return t;
}

std::map<Mask, std::vector<OrderMap>> type_partition(const Semilattice& l, const Poset& p, std::size_t a,
                                                     const ElementList& allowed, std::size_t limit) {
  require_candidate(l, a);
  std::map<Mask, std::vector<OrderMap>> out;
  for (Mask f : filters(p)) out[f];
  for (OrderMap& f : lattice_maps(l, p, allowed, limit)) {
    Mask t = type_of(l, a, f);
    out.at(t).push_back(std::move(f));
  }
  return out;
}

std::map<Mask, std::uint64_t> type_counts(const Semilattice& l, const Poset& p, std::size_t a,
                                          const ElementList& allowed, std::size_t limit) {
  std::map<Mask, std::uint64_t> out;
  for (auto& [f, maps] : type_partition(l, p, a, allowed, limit)) out[f] = maps.size();
  return out;
}

MatchingCheck validate_matching(const Semilattice& l, const Poset& p, std::size_t a, const Matching& m,
                                const ElementList& allowed, std::size_t limit) {
  auto fail = [](std::string why) { return MatchingCheck{false, std::move(why)}; };
  if (!is_filter_mask(p, m.from) || !is_filter_mask(p, m.to)) return fail("type is not a filter");
  auto classes = type_partition(l, p, a, allowed, limit);
  const auto& domain = classes.at(m.from);
  std::set<OrderMap> range_ok(classes.at(m.to).begin(), classes.at(m.to).end());
  std::set<OrderMap> sources, images;
  for (const auto& [f, g] : m.pairs) {
    if (!sources.insert(f).second) return fail("source listed twice");
    if (!images.insert(g).second) return fail("not injective");
    if (!range_ok.count(g)) return fail("image outside the target type");
    bool ok = m.direction == Direction::kDecreasing ? pointwise_leq(l, g, f) : pointwise_leq(l, f, g);
    if (!ok) return fail("image not comparable in the stated direction");
  }
  if (sources != std::set<OrderMap>(domain.begin(), domain.end())) return fail("domain differs from the source type");
  return {};
}

bool is_a_invertible(const Semilattice& l, std::size_t a, const Matching& m) {
  for (const auto& [f, g] : m.pairs) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      std::size_t expect = (m.from & bit(static_cast<int>(x))) ? l.join_or_none(g[x], a) : g[x];
      if (expect != f[x]) return false;
    }
  }
  return true;
}

const OrderMap& image_of(const Matching& m, const OrderMap& f) {
  auto it = std::lower_bound(m.pairs.begin(), m.pairs.end(), f,
                             [](const auto& pr, const OrderMap& key) { return pr.first < key; });
  if (it == m.pairs.end() || it->first != f) throw InputError("map outside the matching's domain");
  return it->second;
}

Matching compose(const Matching& first, const Matching& second) {
  if (first.to != second.from || first.direction != second.direction) throw InputError("matchings do not chain");
  Matching out{first.direction, first.from, second.to, {}};
  for (const auto& [f, g] : first.pairs) out.pairs.emplace_back(f, image_of(second, g));
  sort_pairs(out);
  return out;
}

const char* match_kind_name(MatchKind kind, Direction dir) {
  bool up = dir == Direction::kIncreasing;
  switch (kind) {
    case MatchKind::kFull:
      return up ? "full-up" : "full";
    case MatchKind::kTop:
      return up ? "top-up" : "top";
    case MatchKind::kWeak:
      return up ? "weak-up" : "weak";
  }
  return "?";
}

MatchingDecision decide_matching_property(const Semilattice& l, const Poset& p, std::size_t a, MatchKind kind,
                                          Direction dir, std::size_t limit) {
  require_candidate(l, a);
  const bool up = dir == Direction::kIncreasing;
  MatchingDecision out;
  out.a = a;
  if (up && a == l.bottom()) {
    // Upward properties are only defined for proper join-irreducibles.
    return out;
  }
  auto classes = type_partition(l, p, a, {}, limit);
  const Mask all = low_bits(static_cast<int>(p.size()));
  const Mask anchor = up ? 0 : all;

  std::vector<std::pair<Mask, Mask>> required;
  for (const auto& [f, maps_f] : classes) {
    for (const auto& [g, maps_g] : classes) {
      if (f == g) continue;
      bool want = false;
      switch (kind) {
        case MatchKind::kFull:
          want = up ? subset_of(f, g) : subset_of(g, f);
          break;
        case MatchKind::kTop:
        case MatchKind::kWeak:
          want = f == anchor;
          break;
      }
      if (want) required.emplace_back(f, g);
    }
  }

  for (auto [from, to] : required) {
    const auto& left = classes.at(from);
    const auto& right = classes.at(to);
    if (kind == MatchKind::kWeak) {
      if (left.size() > right.size()) {
        out.fail_from = from;
        out.fail_to = to;
        out.fail_from_count = left.size();
        out.fail_to_count = right.size();
        return out;
      }
      continue;
    }
    BipartiteMatcher bm(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        bool ok = up ? pointwise_leq(l, left[i], right[j]) : pointwise_leq(l, right[j], left[i]);
        if (ok) bm.add_edge(i, j);
      }
    }
    bm.solve();
    if (!bm.saturates_left()) {
      out.fail_from = from;
      out.fail_to = to;
      out.fail_from_count = left.size();
      out.fail_to_count = right.size();
      for (std::size_t i : bm.hall_violator()) out.hall_violator.push_back(left[i]);
      out.matchings.clear();
      return out;
    }
    Matching m{dir, from, to, {}};
    for (std::size_t i = 0; i < left.size(); ++i) m.pairs.emplace_back(left[i], right[bm.mate_of_left(i)]);
    sort_pairs(m);
    out.matchings.push_back(std::move(m));
  }
  out.holds = true;
  return out;
}

MatchingDecision decide_matching_property(const Semilattice& l, const Poset& p, MatchKind kind, Direction dir,
                                          std::size_t limit) {
  std::vector<std::size_t> candidates;
  if (dir == Direction::kDecreasing) candidates.push_back(l.bottom());
  for (std::size_t a : l.join_irreducibles()) candidates.push_back(a);
  MatchingDecision last;
  for (std::size_t a : candidates) {
    last = decide_matching_property(l, p, a, kind, dir, limit);
    if (last.holds) return last;
  }
  last.a.reset();
  return last;
}

Matching matching_lsm(const Semilattice& l, std::size_t c, std::size_t a, const Poset& p, Mask f_filter) {
  if (!l.is_lattice()) throw InputError("needs a lattice");
  auto coatoms = l.coatoms();
  if (std::find(coatoms.begin(), coatoms.end(), c) == coatoms.end()) throw InputError("c is not a coatom");
  if (!is_lower_semimodular_element(l, c)) throw InputError("coatom is not lower semimodular");
  if (a >= l.size() || !l.is_join_irreducible(a)) throw InputError("a is not a proper join-irreducible");
  if (l.leq(a, c)) throw InputError("a lies below the coatom");
  if (!is_filter_mask(p, f_filter)) throw InputError("type is not a filter");
  const Mask all = low_bits(static_cast<int>(p.size()));
  Matching m{Direction::kDecreasing, all, f_filter, {}};
  for (OrderMap& f : maps_of_type(l, p, a, all)) {
    OrderMap g = f;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!(f_filter & bit(static_cast<int>(x)))) g[x] = static_cast<std::uint32_t>(l.meet(f[x], c));
    }
    m.pairs.emplace_back(std::move(f), std::move(g));
  }
  return finish(std::move(m), l, p, a);
}

namespace {

Mask tail_filter(std::size_t n, std::size_t k) {
  // [k, n] in 1-based chain positions.
  return low_bits(static_cast<int>(n)) & ~low_bits(static_cast<int>(k) - 1);
}

template <typename Step>
std::vector<Matching> chain_steps(const Semilattice& l, std::size_t a, std::size_t n, Step step) {
  Poset p = Poset::chain(n);
  std::vector<Matching> out;
  for (std::size_t k = 1; k <= n; ++k) {
    Matching m{Direction::kDecreasing, tail_filter(n, k), tail_filter(n, k + 1), {}};
    for (OrderMap& f : maps_of_type(l, p, a, m.from)) {
      OrderMap g = f;
      std::size_t prev = k == 1 ? l.bottom() : f[k - 2];
      g[k - 1] = static_cast<std::uint32_t>(step(prev, f[k - 1]));
      m.pairs.emplace_back(std::move(f), std::move(g));
    }
    out.push_back(finish(std::move(m), l, p, a));
  }
  return out;
}

}  // namespace

std::vector<Matching> matching_geometric(const Semilattice& l, std::size_t a, std::size_t n) {
  if (!is_geometric(l)) throw InputError("lattice is not geometric");
  auto atoms = l.atoms();
  if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) throw InputError("a is not an atom");
  auto step = [&](std::size_t prev, std::size_t cur) {
    // Greedy independent atoms spanning prev, extended through a to span cur.
    std::size_t span = l.bottom();
    for (std::size_t t : atoms) {
      if (l.leq(t, prev) && !l.leq(t, span)) span = l.join(span, t);
    }
    if (span != prev) throw std::logic_error("greedy atoms do not span the lower value");
    std::size_t with_a = l.join(span, a);
    std::size_t without_a = span;
    for (std::size_t t : atoms) {
      if (l.leq(t, cur) && !l.leq(t, with_a)) {
        with_a = l.join(with_a, t);
        without_a = l.join(without_a, t);
      }
    }
    if (with_a != cur || l.join(without_a, a) != cur || l.leq(a, without_a)) {
      throw std::logic_error("independent-set exchange failed");
    }
    return without_a;
  };
  return chain_steps(l, a, n, step);
}

std::vector<Matching> matching_dual_geometric(const Semilattice& l, std::size_t a, std::size_t n) {
  if (!is_dual_geometric(l)) throw InputError("the dual of the lattice is not geometric");
  if (a >= l.size() || !l.is_join_irreducible(a)) throw InputError("a is not a proper join-irreducible");
  auto coatoms = l.coatoms();
  auto gamma = [&](std::size_t u) {
    for (std::size_t c : coatoms) {
      if (l.leq(u, c) && !l.leq(a, c)) return c;
    }
    throw std::logic_error("no coatom above the element avoids a");
  };
  auto step = [&](std::size_t prev, std::size_t cur) { return l.meet(cur, gamma(prev)); };
  return chain_steps(l, a, n, step);
}

Matching chain_composite(const std::vector<Matching>& steps, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > steps.size() + 1) throw InputError("chain positions out of range");
  Matching out = steps[i - 1];
  for (std::size_t k = i + 1; k < j; ++k) out = compose(out, steps[k - 1]);
  return out;
}

Matching ideal_lattice_matching(const Semilattice& ideals_of_q, const Poset& q, std::size_t x, const Poset& p,
                                Mask from, Mask to, Direction dir) {
  const Semilattice& l = ideals_of_q;
  if (l.labels().empty()) throw InputError("expects the labelled ideal lattice");
  if (x >= q.size()) throw InputError("element out of range");
  const bool up = dir == Direction::kIncreasing;
  if (!up && q.up_mask(x) != bit(static_cast<int>(x))) throw InputError("x is not maximal");
  if (up && q.down_mask(x) != bit(static_cast<int>(x))) throw InputError("x is not minimal");
  if (!is_filter_mask(p, from) || !is_filter_mask(p, to)) throw InputError("type is not a filter");
  if (up ? !subset_of(from, to) : !subset_of(to, from)) throw InputError("filters are not nested");
  std::size_t a = l.index_of(q.down_mask(x));
  Mask changed = up ? to & ~from : from & ~to;
  Matching m{dir, from, to, {}};
  for (OrderMap& f : maps_of_type(l, p, a, from)) {
    OrderMap g = f;
    for (int u : elements_of(changed)) {
      Mask lab = l.labels()[f[u]];
      lab = up ? lab | bit(static_cast<int>(x)) : lab & ~bit(static_cast<int>(x));
      g[u] = static_cast<std::uint32_t>(l.index_of(lab));
    }
    m.pairs.emplace_back(std::move(f), std::move(g));
  }
  return finish(std::move(m), l, p, a);
}

Matching matching_sum(const Matching& sigma, const Matching& rho, std::size_t p_size) {
  if (sigma.direction != rho.direction) throw InputError("directions differ");
  Matching out{sigma.direction, sigma.from | (rho.from << p_size), sigma.to | (rho.to << p_size), {}};
  for (const auto& [f1, g1] : sigma.pairs) {
    for (const auto& [f2, g2] : rho.pairs) {
      OrderMap f = f1, g = g1;
      f.insert(f.end(), f2.begin(), f2.end());
      g.insert(g.end(), g2.begin(), g2.end());
      out.pairs.emplace_back(std::move(f), std::move(g));
    }
  }
  sort_pairs(out);
  return out;
}

Matching restrict_to_ideal(const Semilattice& l, const Matching& sigma, const ElementList& ideal) {
  if (sigma.direction != Direction::kDecreasing) throw InputError("only decreasing matchings restrict to ideals");
  std::vector<bool> in(l.size(), false);
  for (std::size_t u : ideal) in.at(u) = true;
  for (std::size_t u : ideal) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (l.leq(v, u) && !in[v]) throw InputError("subset is not an ideal");
    }
  }
  Matching out{sigma.direction, sigma.from, sigma.to, {}};
  for (const auto& pr : sigma.pairs) {
    if (std::all_of(pr.first.begin(), pr.first.end(), [&](std::uint32_t v) { return in[v]; })) out.pairs.push_back(pr);
  }
  return out;
}

Matching lift_product(const Semilattice& l, const Semilattice& m, const Poset& p, const Matching& sigma) {
  const std::size_t w = m.size();
  Matching out{sigma.direction, sigma.from, sigma.to, {}};
  for (const OrderMap& h : lattice_maps(m, p)) {
    for (const auto& [f, g] : sigma.pairs) {
      OrderMap src(p.size()), dst(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) {
        src[x] = static_cast<std::uint32_t>(f[x] * w + h[x]);
        dst[x] = static_cast<std::uint32_t>(g[x] * w + h[x]);
      }
      out.pairs.emplace_back(std::move(src), std::move(dst));
    }
  }
  sort_pairs(out);
  (void)l;
  return out;
}

namespace {

void require_union_closed_labels(const Semilattice& l) {
  if (l.labels().empty()) throw InputError("expects a lattice given as a union-closed family");
  for (std::size_t u = 0; u < l.size(); ++u) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      std::size_t j = l.join_or_none(u, v);
      if (j == Semilattice::kNone || l.labels()[j] != (l.labels()[u] | l.labels()[v])) {
        throw InputError("family is not union-closed");
      }
    }
  }
  if (l.labels()[l.bottom()] != 0) throw InputError("family must contain the empty set");
}

ElementList indices_of(const Semilattice& l, const SetFamily& f) {
  ElementList out;
  for (Mask m : f) out.push_back(l.index_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

SetFamily as_family(const Semilattice& l) {
  Mask all = 0;
  for (Mask m : l.labels()) all |= m;
  return SetFamily(64 - std::countl_zero(all), l.labels());
}

}  // namespace

ElementList first_neighborhood(const Semilattice& l, std::size_t a) {
  require_union_closed_labels(l);
  return indices_of(l, lattice_neighborhood(as_family(l), l.labels().at(a), 1));
}

ElementList second_neighborhood(const Semilattice& l, std::size_t a) {
  require_union_closed_labels(l);
  return indices_of(l, lattice_neighborhood(as_family(l), l.labels().at(a), 2));
}

Matching restrict_to_neighborhood(const Semilattice& l, const Matching& sigma, std::size_t a) {
  return restrict_to_ideal(l, sigma, second_neighborhood(l, a));
}

Matching lift_from_neighborhood(const Semilattice& l, const ElementList& sub, const Poset& p, std::size_t a,
                                const Matching& sigma_sub) {
  require_union_closed_labels(l);
  const auto& lab = l.labels();
  std::set<Mask> sub_labels;
  for (std::size_t u : sub) sub_labels.insert(lab.at(u));
  if (!sub_labels.count(0)) throw InputError("sub-lattice must contain the empty set");
  for (Mask u : sub_labels) {
    for (Mask v : sub_labels) {
      if (!sub_labels.count(u | v)) throw InputError("sub-lattice is not join-closed");
    }
  }
  for (std::size_t u : first_neighborhood(l, a)) {
    if (!sub_labels.count(lab[u])) throw InputError("sub-lattice does not contain the neighborhood of a");
  }
  std::vector<Mask> disjoint_gens;
  for (std::size_t b : l.join_irreducibles()) {
    if (!(lab[b] & lab[a])) disjoint_gens.push_back(lab[b]);
  }
  auto project_sub = [&](Mask u) {
    Mask acc = 0;
    for (Mask v : sub_labels) {
      if (subset_of(v, u)) acc |= v;
    }
    return acc;
  };
  auto project_b = [&](Mask u) {
    Mask acc = 0;
    for (Mask b : disjoint_gens) {
      if (subset_of(b, u)) acc |= b;
    }
    return acc;
  };
  Matching out{sigma_sub.direction, sigma_sub.from, sigma_sub.to, {}};
  for (OrderMap& f : maps_of_type(l, p, a, sigma_sub.from)) {
    OrderMap g(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) g[x] = static_cast<std::uint32_t>(l.index_of(project_sub(lab[f[x]])));
    const OrderMap& h = image_of(sigma_sub, g);
    OrderMap image(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      image[x] = static_cast<std::uint32_t>(l.index_of(project_b(lab[f[x]]) | lab[h[x]]));
    }
    out.pairs.emplace_back(std::move(f), std::move(image));
  }
  sort_pairs(out);
  return out;
}

}  // namespace orderkit
