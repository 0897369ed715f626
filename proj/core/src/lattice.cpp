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

#include "orderkit/lattice.hpp"

#include <algorithm>
#include <set>

namespace orderkit {

namespace {
using Bits = Poset::Bits;
}

Semilattice Semilattice::from_poset(const Poset& order, std::vector<Mask> labels) {
  const std::size_t n = order.size();
  if (n == 0) throw InputError("a semilattice needs at least one element");
  if (!labels.empty() && labels.size() != n) throw InputError("label count does not match the order");
  auto bottom = order.bottom();
  if (!bottom) throw InputError("no least element");

  std::vector<std::size_t> pos(n);
  {
    auto ext = linear_extension(order);
    for (std::size_t i = 0; i < n; ++i) pos[ext[i]] = i;
  }
  Semilattice l;
  l.order_ = order;
  l.labels_ = std::move(labels);
  l.bottom_ = *bottom;
  l.meet_.assign(n * n, kNone);
  l.join_.assign(n * n, kNone);
  l.lattice_ = true;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      // The glb is the lower bound latest in a linear extension, provided
      // it lies above every other lower bound.
      Bits lower = order.down(u) & order.down(v);
      std::size_t best = kNone;
      for (std::size_t x = lower.find_first(); x != Bits::npos; x = lower.find_next(x)) {
        if (best == kNone || pos[x] > pos[best]) best = x;
      }
      if (order.down(best) != lower) throw InputError("some pair has no greatest lower bound");
      l.meet_[u * n + v] = l.meet_[v * n + u] = best;

      Bits upper = order.up(u) & order.up(v);
      std::size_t least = kNone;
      for (std::size_t x = upper.find_first(); x != Bits::npos; x = upper.find_next(x)) {
        if (least == kNone || pos[x] < pos[least]) least = x;
      }
      if (least == kNone || order.up(least) != upper) {
        l.lattice_ = false;
      } else {
        l.join_[u * n + v] = l.join_[v * n + u] = least;
      }
    }
  }
  return l;
}

Semilattice Semilattice::from_family(const SetFamily& f) {
  return from_poset(Poset::inclusion(f.members()), f.members());
}

std::size_t Semilattice::join(std::size_t u, std::size_t v) const {
  std::size_t j = join_or_none(u, v);
  if (j == kNone) throw InputError("join does not exist");
  return j;
}

std::optional<std::size_t> Semilattice::top() const { return order_.top(); }

bool Semilattice::is_join_irreducible(std::size_t u) const {
  std::size_t lower = 0;
  const Bits& d = order_.down(u);
  for (std::size_t x = d.find_first(); x != Bits::npos; x = d.find_next(x)) {
    if (order_.covers(x, u)) ++lower;
  }
  return lower == 1;
}

std::vector<std::size_t> Semilattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (is_join_irreducible(u)) out.push_back(u);
  }
  return out;
}

std::size_t Semilattice::lower_cover(std::size_t a) const {
  const Bits& d = order_.down(a);
  std::size_t found = kNone;
  for (std::size_t x = d.find_first(); x != Bits::npos; x = d.find_next(x)) {
    if (order_.covers(x, a)) {
      if (found != kNone) throw InputError("element is not join-irreducible");
      found = x;
    }
  }
  if (found == kNone) throw InputError("element is not join-irreducible");
  return found;
}

std::vector<std::size_t> Semilattice::meet_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    std::size_t upper = 0;
    const Bits& up = order_.up(u);
    for (std::size_t x = up.find_first(); x != Bits::npos; x = up.find_next(x)) {
      if (order_.covers(u, x)) ++upper;
    }
    if (upper == 1) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> Semilattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (order_.covers(bottom_, u)) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> Semilattice::coatoms() const {
  std::vector<std::size_t> out;
  auto t = top();
  if (!t) return out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (order_.covers(u, *t)) out.push_back(u);
  }
  return out;
}

std::size_t Semilattice::index_of(Mask label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("no element with label " + set_to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

Semilattice Semilattice::dual() const {
  if (!lattice_) throw InputError("the dual of a semilattice without all joins is not a meet-semilattice");
  return from_poset(order_.dual());
}

Semilattice Semilattice::completion() const {
  if (top()) return *this;
  const std::size_t n = size();
  Poset bigger = Poset::from_relation(n + 1, [&](std::size_t i, std::size_t j) {
    if (j == n) return true;
    if (i == n) return false;
    return order_.leq(i, j);
  });
  std::vector<Mask> labels;
  if (!labels_.empty()) {
    labels = labels_;
    Mask all = 0;
    for (Mask m : labels_) all |= m;
    labels.push_back(all);
  }
  return from_poset(bigger, std::move(labels));
}

Semilattice Semilattice::sub(const std::vector<std::size_t>& elements) const {
  std::vector<bool> in(size(), false);
  for (std::size_t x : elements) {
    if (x >= size()) throw InputError("element out of range");
    in[x] = true;
  }
  if (!in[bottom_]) throw InputError("subsemilattice must contain the least element");
  for (std::size_t u : elements) {
    for (std::size_t v : elements) {
      if (!in[meet(u, v)]) throw InputError("subset is not closed under meets");
    }
  }
  std::vector<Mask> labels;
  if (!labels_.empty()) {
    for (std::size_t x : elements) labels.push_back(labels_[x]);
  }
  return from_poset(order_.induced(elements), std::move(labels));
}

Semilattice boolean_lattice(int n) {
  if (n < 0 || n > 16) throw InputError("boolean lattice size out of range");
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  return Semilattice::from_family(SetFamily(n, all));
}

Semilattice m_flat(int n) {
  if (n < 0 || n > 63) throw InputError("atom count out of range");
  std::vector<Mask> members{0};
  for (int i = 0; i < n; ++i) members.push_back(bit(i));
  return Semilattice::from_family(SetFamily(n, members));
}

Semilattice m_hat(int n) {
  if (n < 0 || n > 63) throw InputError("atom count out of range");
  std::vector<Mask> members{0, low_bits(n + 1)};
  for (int i = 0; i < n; ++i) members.push_back(bit(i));
  return Semilattice::from_family(SetFamily(n + 1, members));
}

Semilattice chain_lattice(std::size_t n) {
  if (n == 0 || n > 64) throw InputError("chain length out of range");
  std::vector<Mask> members;
  for (std::size_t i = 0; i < n; ++i) members.push_back(low_bits(static_cast<int>(i)));
  return Semilattice::from_family(SetFamily(static_cast<int>(n) - 1, members));
}

Semilattice pentagon_lattice() {
  std::vector<Mask> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(bit(i) | bit((i + 1) % 5));
  SetFamily closed = union_closure(SetFamily(5, edges));
  std::vector<Mask> members = closed.members();
  members.push_back(0);
  return Semilattice::from_family(SetFamily(5, members));
}

Semilattice ideal_lattice(const Poset& q) {
  return Semilattice::from_family(SetFamily(static_cast<int>(q.size()), ideals(q)));
}

Semilattice lattice_product(const Semilattice& l, const Semilattice& m) {
  return Semilattice::from_poset(product(l.order(), m.order()));
}

PowerLattice lattice_power(const Semilattice& l, const Poset& p, std::size_t limit) {
  PowerLattice out;
  out.maps = order_maps(p, l.order(), limit);
  const auto& maps = out.maps;
  Poset order = Poset::from_relation(maps.size(), [&](std::size_t i, std::size_t j) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!l.leq(maps[i][x], maps[j][x])) return false;
    }
    return true;
  });
  out.lattice = Semilattice::from_poset(order);
  return out;
}

bool is_lower_semimodular_element(const Semilattice& l, std::size_t u) {
  const Poset& o = l.order();
  for (std::size_t v = 0; v < l.size(); ++v) {
    if (!o.covers(u, v)) continue;
    for (std::size_t w = 0; w < l.size(); ++w) {
      std::size_t hi = l.meet(v, w), lo = l.meet(u, w);
      if (hi != lo && !o.covers(lo, hi)) return false;
    }
  }
  return true;
}

bool is_lower_semimodular(const Semilattice& l) {
  for (std::size_t u = 0; u < l.size(); ++u) {
    if (!is_lower_semimodular_element(l, u)) return false;
  }
  return true;
}

bool is_upper_semimodular(const Semilattice& l) {
  if (!l.is_lattice()) throw InputError("upper semimodularity needs a lattice");
  const Poset& o = l.order();
  for (auto [u, v] : o.cover_pairs()) {
    for (std::size_t w = 0; w < l.size(); ++w) {
      std::size_t lo = l.join(u, w), hi = l.join(v, w);
      if (hi != lo && !o.covers(lo, hi)) return false;
    }
  }
  return true;
}

bool is_atomic(const Semilattice& l) {
  auto atoms = l.atoms();
  for (std::size_t u = 0; u < l.size(); ++u) {
    if (u == l.bottom()) continue;
    std::size_t acc = l.bottom();
    for (std::size_t a : atoms) {
      if (!l.leq(a, u)) continue;
      acc = l.join_or_none(acc, a);
    }
    if (acc != u) return false;
  }
  return true;
}

bool is_coatomic(const Semilattice& l) {
  auto t = l.top();
  if (!t) return false;
  auto coatoms = l.coatoms();
  for (std::size_t u = 0; u < l.size(); ++u) {
    if (u == *t) continue;
    std::size_t acc = *t;
    for (std::size_t c : coatoms) {
      if (l.leq(u, c)) acc = l.meet(acc, c);
    }
    if (acc != u) return false;
  }
  return true;
}

bool is_geometric(const Semilattice& l) { return l.is_lattice() && is_atomic(l) && is_upper_semimodular(l); }

bool is_dual_geometric(const Semilattice& l) {
  return l.is_lattice() && is_coatomic(l) && is_lower_semimodular(l);
}

bool is_distributive(const Semilattice& l) {
  if (!l.is_lattice()) return false;
  for (std::size_t u = 0; u < l.size(); ++u) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      for (std::size_t w = 0; w < l.size(); ++w) {
        if (l.meet(u, l.join(v, w)) != l.join(l.meet(u, v), l.meet(u, w))) return false;
      }
    }
  }
  return true;
}

std::size_t lattice_height(const Semilattice& l) { return height(l.order()); }

SetFamily canonical_intersection_rep(const Semilattice& l) {
  auto j = l.join_irreducibles();
  if (j.size() > 64) throw Refusal("more than 64 join-irreducibles");
  std::vector<Mask> members;
  for (std::size_t u = 0; u < l.size(); ++u) {
    Mask m = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (l.leq(j[i], u)) m |= bit(static_cast<int>(i));
    }
    members.push_back(m);
  }
  return SetFamily(static_cast<int>(j.size()), members);
}

SetFamily canonical_union_rep(const Semilattice& l) {
  if (!l.is_lattice()) throw InputError("the union-closed representation needs a lattice");
  auto m = l.meet_irreducibles();
  if (m.size() > 64) throw Refusal("more than 64 meet-irreducibles");
  std::vector<Mask> members;
  for (std::size_t u = 0; u < l.size(); ++u) {
    Mask s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!l.leq(u, m[i])) s |= bit(static_cast<int>(i));
    }
    members.push_back(s);
  }
  return SetFamily(static_cast<int>(m.size()), members);
}

IrredundantRep irredundant_rep(const SetFamily& f) {
  if (f.empty() || !is_intersection_closed(f)) throw InputError("family is not intersection-closed");
  Semilattice l = Semilattice::from_family(f);
  IrredundantRep out;
  Mask image = 0;
  for (std::size_t a : l.join_irreducibles()) {
    Mask diff = l.labels()[a] & ~l.labels()[l.lower_cover(a)];
    int point = elements_of(diff).front();
    out.irreducibles.push_back(l.labels()[a]);
    out.points.push_back(point);
    image |= bit(point);
  }
  out.restricted = restrict(f, image, Restriction::kIntersect);
  return out;
}

SetFamily join_generated(int ground, const std::vector<Mask>& gens) {
  std::set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask u : frontier) {
      for (Mask g : gens) {
        if (seen.insert(u | g).second) next.push_back(u | g);
      }
    }
    frontier = std::move(next);
  }
  return SetFamily(ground, std::vector<Mask>(seen.begin(), seen.end()));
}

SetFamily lattice_neighborhood(const SetFamily& l, Mask u, std::size_t index) {
  if (!l.contains(0) || !is_union_closed(l)) throw InputError("neighborhoods need a union-closed family containing the empty set");
  if (!subset_of(u, l.union_all())) throw InputError("set leaves the domain of the family");
  if (index == 0) return restrict(l, u, Restriction::kSubsetOf);
  SetFamily gens = generators(l);
  auto neighborhood = [&](Mask x) {
    std::vector<Mask> touching;
    for (Mask g : gens) {
      if (g & x) touching.push_back(g);
    }
    return join_generated(l.ground(), touching);
  };
  SetFamily odd = neighborhood(u);
  for (std::size_t i = 3; i <= index; i += 2) odd = neighborhood(odd.union_all());
  if (index % 2 == 1) return odd;
  return restrict(l, odd.union_all(), Restriction::kSubsetOf);
}

}  // namespace orderkit
