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

#include "orderkit/family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "orderkit/bipartite.hpp"

namespace orderkit {

SetFamily::SetFamily(int ground, std::vector<Mask> members) : ground_(ground), members_(std::move(members)) {
  if (ground < 0 || ground > 64) throw InputError("ground set size must be in [0, 64]");
  for (Mask u : members_) {
    if (!subset_of(u, ground_mask())) {
      throw InputError("member " + set_to_string(u) + " is not inside a ground set of size " + std::to_string(ground));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Mask u) const { return std::binary_search(members_.begin(), members_.end(), u); }

Mask SetFamily::union_all() const {
  Mask out = 0;
  for (Mask u : members_) out |= u;
  return out;
}

SetFamily restrict(const SetFamily& f, Mask x, Restriction mode) {
  std::vector<Mask> out;
  for (Mask u : f) {
    switch (mode) {
      case Restriction::kSubsetOf:
        if (subset_of(u, x)) out.push_back(u);
        break;
      case Restriction::kSupersetOf:
        if (subset_of(x, u)) out.push_back(u);
        break;
      case Restriction::kIntersect:
        out.push_back(u & x);
        break;
      case Restriction::kMinus:
        out.push_back(u & ~x);
        break;
    }
  }
  return SetFamily(f.ground(), std::move(out));
}

std::vector<Mask> max_antichain(const std::vector<Mask>& sets) {
  const std::size_t n = sets.size();
  BipartiteMatcher m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[i] != sets[j] && subset_of(sets[i], sets[j])) m.add_edge(i, j);
    }
  }
  m.solve();
  auto [cover_left, cover_right] = m.vertex_cover();
  std::vector<Mask> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!cover_left[i] && !cover_right[i]) out.push_back(sets[i]);
  }
  return out;
}

std::size_t family_width(const std::vector<Mask>& sets) {
  const std::size_t n = sets.size();
  BipartiteMatcher m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[i] != sets[j] && subset_of(sets[i], sets[j])) m.add_edge(i, j);
    }
  }
  return n - m.solve();
}

Poset inclusion_poset(const SetFamily& f) { return Poset::inclusion(f.members()); }

namespace {

std::vector<Mask> members_containing(const SetFamily& f, Mask x) {
  std::vector<Mask> out;
  for (Mask u : f) {
    if (subset_of(x, u)) out.push_back(u);
  }
  return out;
}

}  // namespace

std::size_t width_degree(const SetFamily& f, int x) {
  if (x < 0 || x >= f.ground()) throw InputError("element " + std::to_string(x) + " is outside the ground set");
  return family_width(members_containing(f, bit(x)));
}

WidthCheck check_locally_k_wide(const SetFamily& f, std::size_t k) {
  WidthCheck out;
  for (int x = 0; x < f.ground(); ++x) {
    std::vector<Mask> a = max_antichain(members_containing(f, bit(x)));
    if (a.size() > k) {
      a.resize(k + 1);
      out.ok = false;
      out.witness = std::move(a);
      return out;
    }
  }
  return out;
}

bool is_locally_k_wide(const SetFamily& f, std::size_t k) { return check_locally_k_wide(f, k).ok; }

Mask center(const SetFamily& f, Mask a) {
  Mask out = a;
  for (Mask u : f) {
    if (!subset_of(u, a) && !subset_of(a, u)) out &= ~u;
  }
  return out;
}

bool is_centered(const SetFamily& f) {
  return std::all_of(f.begin(), f.end(), [&](Mask u) { return center(f, u) != 0; });
}

bool contains_union_and_singletons(const SetFamily& f) {
  const Mask x = f.union_all();
  if (!f.contains(x)) return false;
  for (int e : elements_of(x)) {
    if (!f.contains(bit(e))) return false;
  }
  return true;
}

bool is_pseudotree(const SetFamily& f, std::size_t k) {
  return contains_union_and_singletons(f) && is_centered(f) && is_locally_k_wide(f, k);
}

bool is_forest(const SetFamily& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Mask u = m[i], v = m[j];
      if ((u & v) != 0 && !subset_of(u, v) && !subset_of(v, u)) return false;
    }
  }
  return true;
}

bool is_tree(const SetFamily& f) { return is_forest(f) && contains_union_and_singletons(f); }

TreeIdentity tree_size_identity(const SetFamily& f) {
  if (!is_tree(f)) throw InputError("family is not a tree of sets");
  TreeIdentity out;
  out.size = f.size();
  out.domain = static_cast<std::size_t>(popcount(f.union_all()));
  for (Mask u : f) {
    if (popcount(u) < 2) continue;
    // In a tree the members covered by u are the maximal members strictly inside it.
    std::size_t covered = 0;
    for (Mask v : f) {
      if (v == u || !subset_of(v, u)) continue;
      bool maximal = true;
      for (Mask w : f) {
        if (w != u && w != v && subset_of(v, w) && subset_of(w, u)) {
          maximal = false;
          break;
        }
      }
      if (maximal) ++covered;
    }
    out.excess_sum += covered - 2;
  }
  return out;
}

namespace {

template <typename Op>
SetFamily closure(const SetFamily& g, Op op) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> result;
  for (Mask u : g) {
    std::vector<Mask> fresh;
    if (seen.insert(u).second) fresh.push_back(u);
    for (Mask v : result) {
      Mask w = op(u, v);
      if (seen.insert(w).second) fresh.push_back(w);
    }
    result.insert(result.end(), fresh.begin(), fresh.end());
  }
  return SetFamily(g.ground(), std::move(result));
}

}  // namespace

SetFamily union_closure(const SetFamily& g) {
  return closure(g, [](Mask a, Mask b) { return a | b; });
}

SetFamily intersection_closure(const SetFamily& g) {
  return closure(g, [](Mask a, Mask b) { return a & b; });
}

bool is_union_closed(const SetFamily& f) {
  for (Mask u : f) {
    for (Mask v : f) {
      if (!f.contains(u | v)) return false;
    }
  }
  return true;
}

bool is_intersection_closed(const SetFamily& f) {
  for (Mask u : f) {
    for (Mask v : f) {
      if (!f.contains(u & v)) return false;
    }
  }
  return true;
}

SetFamily generators(const SetFamily& f) {
  std::vector<Mask> out;
  for (Mask u : f) {
    Mask below = 0;
    for (Mask v : f) {
      if (v != u && subset_of(v, u)) below |= v;
    }
    if (below != u) out.push_back(u);
  }
  return SetFamily(f.ground(), std::move(out));
}

bool is_filter_in(const SetFamily& f, Mask x) {
  for (Mask u : f) {
    if (!subset_of(u, x)) return false;
    for (int e : elements_of(x & ~u)) {
      if (!f.contains(u | bit(e))) return false;
    }
  }
  return true;
}

Rational filter_density(const SetFamily& f, Mask x) {
  if (!is_filter_in(f, x)) throw InputError("family is not a filter of the power set");
  return Rational(f.size()) / Rational(BigInt(1) << popcount(x));
}

bool kleitman_check(const SetFamily& f, const SetFamily& g, Mask x) {
  std::vector<Mask> both;
  for (Mask u : f) {
    if (g.contains(u)) both.push_back(u);
  }
  SetFamily meet(f.ground(), std::move(both));
  return filter_density(meet, x) >= filter_density(f, x) * filter_density(g, x);
}

SetFamily filter_generated(const std::vector<Mask>& sets, Mask x) {
  std::vector<Mask> out;
  const int n = popcount(x);
  const std::vector<int> xs = elements_of(x);
  for (Mask sub = 0; sub < (Mask{1} << n); ++sub) {
    Mask u = 0;
    for (int i = 0; i < n; ++i) {
      if (sub & bit(i)) u |= bit(xs[i]);
    }
    for (Mask s : sets) {
      if (subset_of(s, u)) {
        out.push_back(u);
        break;
      }
    }
  }
  int ground = x == 0 ? 0 : 64 - std::countl_zero(x);
  return SetFamily(ground, std::move(out));
}

Mask arc(int n, int start, int length) {
  if (length <= 0) return 0;
  if (length >= n) return low_bits(n);
  Mask run = low_bits(length) << start;
  Mask wrapped = run >> n;
  return (run | wrapped) & low_bits(n);
}

Mask segment(int i, int j) {
  if (j < i) return 0;
  return low_bits(j + 1) & ~low_bits(i);
}

int arc_start(int n, Mask u) {
  if (u == 0 || u == low_bits(n)) return 0;
  for (int x : elements_of(u)) {
    int prev = (x + n - 1) % n;
    if (!(u & bit(prev))) return x;
  }
  return 0;
}

bool is_arc(int n, Mask u) {
  if (!subset_of(u, low_bits(n))) return false;
  if (u == 0 || u == low_bits(n)) return true;
  return arc(n, arc_start(n, u), popcount(u)) == u;
}

bool is_segment(Mask u) {
  if (u == 0) return true;
  Mask shifted = u >> std::countr_zero(u);
  return (shifted & (shifted + 1)) == 0;
}

}  // namespace orderkit
