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

#include "orderkit/poset.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "orderkit/bipartite.hpp"

namespace orderkit {

namespace {

void check_element(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("element " + std::to_string(i) + " out of range for a poset of size " + std::to_string(n));
}

}  // namespace

Poset::Poset(std::vector<Bits> up) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) down_[j].set(i);
  }
  if (n <= 64) {
    up_mask_.assign(n, 0);
    down_mask_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (up_[i][j]) {
          up_mask_[i] |= bit(static_cast<int>(j));
          down_mask_[j] |= bit(static_cast<int>(i));
        }
      }
    }
  }
}

Poset Poset::from_covers(std::size_t n, const std::vector<Cover>& covers) {
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, hi] : covers) {
    check_element(n, lo);
    check_element(n, hi);
    if (lo == hi) throw InputError("cover relation contains a loop at " + std::to_string(lo));
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    std::size_t i = ready.back();
    ready.pop_back();
    order.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indegree[j] == 0) ready.push_back(j);
    }
  }
  if (order.size() != n) throw InputError("cover relation contains a cycle");

  std::vector<Bits> up(n, Bits(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t i = *it;
    up[i].set(i);
    for (std::size_t j : succ[i]) up[i] |= up[j];
  }
  return Poset(std::move(up));
}

Poset Poset::from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(i, j)) up[i].set(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i][i]) throw InputError("relation is not reflexive at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && up[i][j] && up[j][i]) throw InputError("relation is not antisymmetric");
      if (up[i][j] && !up[j].is_subset_of(up[i])) throw InputError("relation is not transitive");
    }
  }
  return Poset(std::move(up));
}

Poset Poset::chain(std::size_t n) {
  return from_relation(n, [](std::size_t i, std::size_t j) { return i <= j; });
}

Poset Poset::antichain(std::size_t n) {
  return from_relation(n, [](std::size_t i, std::size_t j) { return i == j; });
}

Poset Poset::inclusion(const std::vector<Mask>& sets) {
  return from_relation(sets.size(), [&](std::size_t i, std::size_t j) { return subset_of(sets[i], sets[j]); });
}

bool Poset::covers(std::size_t i, std::size_t j) const {
  return lt(i, j) && (up_[i] & down_[j]).count() == 2;
}

std::vector<Poset::Cover> Poset::cover_pairs() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (covers(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].all()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].all()) return i;
  }
  return std::nullopt;
}

Poset Poset::dual() const { return Poset(down_); }

Poset Poset::induced(const std::vector<std::size_t>& elements) const {
  for (std::size_t e : elements) check_element(size(), e);
  return from_relation(elements.size(), [&](std::size_t i, std::size_t j) { return leq(elements[i], elements[j]); });
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  return Poset::from_relation(p.size() * m, [&](std::size_t a, std::size_t b) {
    return p.leq(a / m, b / m) && q.leq(a % m, b % m);
  });
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  return Poset::from_relation(n + q.size(), [&](std::size_t a, std::size_t b) {
    if (a < n && b < n) return p.leq(a, b);
    if (a >= n && b >= n) return q.leq(a - n, b - n);
    return false;
  });
}

namespace {

// Split graph: left copy i joined to right copy j whenever i < j.
BipartiteMatcher split_matching(const Poset& p) {
  BipartiteMatcher m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.lt(i, j)) m.add_edge(i, j);
    }
  }
  m.solve();
  return m;
}

}  // namespace

Antichain width(const Poset& p) {
  BipartiteMatcher m = split_matching(p);
  auto [cover_left, cover_right] = m.vertex_cover();
  Antichain out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!cover_left[i] && !cover_right[i]) out.elements.push_back(i);
  }
  out.width = out.elements.size();
  return out;
}

std::size_t width_brute(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw Refusal("exhaustive width search is limited to 20 elements");
  std::vector<Mask> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.comparable(i, j)) comparable[i] |= bit(static_cast<int>(j));
    }
  }
  std::function<std::size_t(Mask)> best = [&](Mask candidates) -> std::size_t {
    if (candidates == 0) return 0;
    int i = std::countr_zero(candidates);
    std::size_t with = 1 + best(candidates & ~comparable[i]);
    std::size_t without = best(candidates & ~bit(i));
    return std::max(with, without);
  };
  return best(low_bits(static_cast<int>(n)));
}

std::vector<std::vector<std::size_t>> chain_decomposition(const Poset& p) {
  BipartiteMatcher m = split_matching(p);
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (m.mate_of_right(i) != BipartiteMatcher::kFree) continue;
    std::vector<std::size_t> chain;
    for (std::size_t x = i; x != BipartiteMatcher::kFree; x = m.mate_of_left(x)) chain.push_back(x);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<std::size_t> linear_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = p.down(i).count() - 1;
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> out;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    out.push_back(i);
    for (std::size_t j = p.up(i).find_first(); j != Poset::Bits::npos; j = p.up(i).find_next(j)) {
      if (j != i && --pending[j] == 0) ready.push(j);
    }
  }
  return out;
}

std::size_t height(const Poset& p) {
  std::vector<std::size_t> longest(p.size(), 0);
  std::size_t best = 0;
  for (std::size_t x : linear_extension(p)) {
    for (std::size_t y = p.down(x).find_first(); y != Poset::Bits::npos; y = p.down(x).find_next(y)) {
      if (y != x) longest[x] = std::max(longest[x], longest[y] + 1);
    }
    best = std::max(best, longest[x]);
  }
  return best;
}

bool is_antichain(const Poset& p, const std::vector<std::size_t>& elements) {
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (p.comparable(elements[a], elements[b])) return false;
    }
  }
  return true;
}

bool is_chain(const Poset& p, const std::vector<std::size_t>& elements) {
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (!p.comparable(elements[a], elements[b])) return false;
    }
  }
  return true;
}

namespace {

void require_mask_sized(const Poset& p) {
  if (p.size() > 64) throw InputError("mask operations need at most 64 elements");
}

}  // namespace

Mask up_closure(const Poset& p, Mask s) {
  require_mask_sized(p);
  Mask out = 0;
  for (int x : elements_of(s)) out |= p.up_mask(x);
  return out;
}

Mask down_closure(const Poset& p, Mask s) {
  require_mask_sized(p);
  Mask out = 0;
  for (int x : elements_of(s)) out |= p.down_mask(x);
  return out;
}

Mask minimal_of(const Poset& p, Mask s) {
  require_mask_sized(p);
  Mask out = 0;
  for (int x : elements_of(s)) {
    if ((p.down_mask(x) & s) == bit(x)) out |= bit(x);
  }
  return out;
}

Mask maximal_of(const Poset& p, Mask s) {
  require_mask_sized(p);
  Mask out = 0;
  for (int x : elements_of(s)) {
    if ((p.up_mask(x) & s) == bit(x)) out |= bit(x);
  }
  return out;
}

bool is_antichain_mask(const Poset& p, Mask s) { return minimal_of(p, s) == s; }

std::vector<Mask> filters(const Poset& p) {
  require_mask_sized(p);
  std::vector<Mask> out;
  for_each_order_map(p, Poset::chain(2), [&](const OrderMap& f) {
    Mask m = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] == 1) m |= bit(static_cast<int>(x));
    }
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Mask> ideals(const Poset& p) {
  std::vector<Mask> out = filters(p);
  const Mask all = low_bits(static_cast<int>(p.size()));
  for (Mask& m : out) m = all & ~m;
  return out;
}

void for_each_order_map(const Poset& p, const Poset& q, const std::function<bool(const OrderMap&)>& visit) {
  const std::size_t n = p.size();
  const std::vector<std::size_t> order = linear_extension(p);
  // Lower covers suffice: transitivity of Q handles the rest.
  std::vector<std::vector<std::size_t>> lower(n);
  for (auto [lo, hi] : p.cover_pairs()) lower[hi].push_back(lo);

  OrderMap f(n, 0);
  Poset::Bits everything(q.size());
  everything.set();
  bool stopped = false;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (t == n) {
      if (!visit(f)) stopped = true;
      return;
    }
    const std::size_t x = order[t];
    Poset::Bits candidates = everything;
    for (std::size_t y : lower[x]) candidates &= q.up(f[y]);
    for (std::size_t v = candidates.find_first(); v != Poset::Bits::npos && !stopped; v = candidates.find_next(v)) {
      f[x] = static_cast<std::uint32_t>(v);
      assign(t + 1);
    }
  };
  if (n == 0) {
    visit(f);
    return;
  }
  if (q.size() == 0) return;
  assign(0);
}

std::vector<OrderMap> order_maps(const Poset& p, const Poset& q, std::size_t limit) {
  std::vector<OrderMap> out;
  for_each_order_map(p, q, [&](const OrderMap& f) {
    if (out.size() == limit) throw Refusal("more than " + std::to_string(limit) + " order maps");
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_order_maps(const Poset& p, const Poset& q) {
  std::uint64_t count = 0;
  for_each_order_map(p, q, [&](const OrderMap&) {
    count = checked_add(count, 1);
    return true;
  });
  return count;
}

bool is_order_preserving(const Poset& p, const Poset& q, const OrderMap& f) {
  if (f.size() != p.size()) return false;
  for (std::uint32_t v : f) {
    if (v >= q.size()) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !q.leq(f[i], f[j])) return false;
    }
  }
  return true;
}

}  // namespace orderkit
