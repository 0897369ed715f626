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

#include "orderkit/antichains.hpp"

#include <algorithm>
#include <functional>

namespace orderkit {

namespace {

using Bits = Poset::Bits;

Bits to_bits(const Poset& p, const ElementSet& a) {
  Bits b(p.size());
  for (std::size_t x : a) {
    if (x >= p.size()) throw InputError("element out of range");
    b.set(x);
  }
  return b;
}

ElementSet to_set(const Bits& b) {
  ElementSet out;
  for (std::size_t x = b.find_first(); x != Bits::npos; x = b.find_next(x)) out.push_back(x);
  return out;
}

Bits filter_bits(const Poset& p, const ElementSet& a) {
  Bits b(p.size());
  for (std::size_t x : a) b |= p.up(x);
  return b;
}

ElementSet minimal_in(const Poset& p, const Bits& s) {
  ElementSet out;
  for (std::size_t x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    if ((p.down(x) & s).count() == 1) out.push_back(x);
  }
  return out;
}

void require_antichain(const Poset& p, const ElementSet& a) {
  for (std::size_t x : a) {
    if (x >= p.size()) throw InputError("element out of range");
  }
  if (!is_antichain(p, a)) throw InputError("input is not an antichain");
}

std::size_t width_of(const Poset& p, const Bits& s) {
  if (s.none()) return 0;
  return width(p.induced(to_set(s))).width;
}

}  // namespace

ElementSet filter_of(const Poset& p, const ElementSet& a) { return to_set(filter_bits(p, a)); }

bool filter_leq(const Poset& p, const ElementSet& a, const ElementSet& b) {
  return filter_bits(p, b).is_subset_of(filter_bits(p, a));
}

ElementSet antichain_meet(const Poset& p, const ElementSet& a, const ElementSet& b) {
  require_antichain(p, a);
  require_antichain(p, b);
  return minimal_in(p, to_bits(p, a) | to_bits(p, b));
}

ElementSet antichain_join(const Poset& p, const ElementSet& a, const ElementSet& b) {
  require_antichain(p, a);
  require_antichain(p, b);
  return minimal_in(p, filter_bits(p, a) & filter_bits(p, b));
}

std::vector<ElementSet> all_antichains(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<ElementSet> out;
  ElementSet current;
  Bits blocked(n);
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(current);
    for (std::size_t x = from; x < n; ++x) {
      if (blocked[x]) continue;
      Bits saved = blocked;
      blocked |= p.up(x);
      blocked |= p.down(x);
      current.push_back(x);
      grow(x + 1);
      current.pop_back();
      blocked = saved;
    }
  };
  grow(0);
  std::vector<std::size_t> ideal_size(out.size());
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Bits d(n);
    for (std::size_t x : out[i]) d |= p.down(x);
    ideal_size[i] = d.count();
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (ideal_size[i] != ideal_size[j]) return ideal_size[i] < ideal_size[j];
    return out[i] < out[j];
  });
  std::vector<ElementSet> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

int class_index(const Poset& p, const ElementSet& a) {
  require_antichain(p, a);
  const Bits up = filter_bits(p, a);
  const Bits in_a = to_bits(p, a);
  // The largest antichain of [A) through y ∉ A is y plus a maximum
  // antichain of the part of [A) incomparable to y.
  int best = -1;  // no such y: the condition is vacuous
  for (std::size_t y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
    if (in_a[y]) continue;
    Bits rest = up - p.up(y) - p.down(y);
    best = std::max(best, 1 + static_cast<int>(width_of(p, rest)));
  }
  return best < 0 ? -1 : std::max(-1, best - static_cast<int>(a.size()));
}

bool is_maximal_r_antichain(const Poset& p, const ElementSet& a) { return class_index(p, a) == -1; }

ElementSet maximal_sperner_antichain(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  const std::size_t w = width(p).width;
  Bits on_some_maximum(n);
  Bits all(n);
  all.set();
  for (std::size_t x = 0; x < n; ++x) {
    Bits rest = all - p.up(x) - p.down(x);
    if (1 + width_of(p, rest) == w) on_some_maximum.set(x);
  }
  ElementSet top;
  for (std::size_t x = on_some_maximum.find_first(); x != Bits::npos; x = on_some_maximum.find_next(x)) {
    if ((p.up(x) & on_some_maximum).count() == 1) top.push_back(x);
  }
  if (top.size() != w) throw std::logic_error("maximal Sperner antichain has the wrong size");
  return top;
}

std::vector<ElementSet> maximal_star_antichains(const Poset& p) {
  std::vector<ElementSet> out;
  for (ElementSet& a : all_antichains(p)) {
    if (!a.empty() && is_maximal_r_antichain(p, a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<ElementSet> maximal_r_antichains(const Poset& p, std::size_t r) {
  std::vector<ElementSet> out;
  for (ElementSet& a : maximal_star_antichains(p)) {
    if (a.size() == r) out.push_back(std::move(a));
  }
  return out;
}

ElementSet star_union(const Poset& p) {
  Bits u(p.size());
  for (const ElementSet& a : maximal_star_antichains(p)) u |= to_bits(p, a);
  return to_set(u);
}

SequenceCheck incomparable_sequence_check(const Poset& p, const std::vector<ElementSet>& seq) {
  SequenceCheck out;
  out.length = seq.size();
  const std::size_t r = seq.empty() ? 0 : seq.front().size();
  out.bound = binomial(width(p).width, r);
  out.hypotheses = true;
  for (std::size_t i = 0; i < seq.size() && out.hypotheses; ++i) {
    require_antichain(p, seq[i]);
    if (seq[i].size() != r) out.hypotheses = false;
    for (std::size_t j = i + 1; j < seq.size() && out.hypotheses; ++j) {
      if (filter_leq(p, seq[i], seq[j]) || filter_leq(p, seq[j], seq[i])) {
        out.hypotheses = false;
        break;
      }
      ElementSet both;
      std::set_union(seq[i].begin(), seq[i].end(), seq[j].begin(), seq[j].end(), std::back_inserter(both));
      Poset sub = p.induced(both);
      ElementSet local;
      for (std::size_t x : seq[j]) local.push_back(std::lower_bound(both.begin(), both.end(), x) - both.begin());
      if (!is_maximal_r_antichain(sub, local)) out.hypotheses = false;
    }
  }
  out.within_bound = out.length <= out.bound;
  return out;
}

namespace {

Mask sperner_closure_of(const SetFamily& f, Mask a, std::size_t* width_out) {
  std::vector<Mask> above;
  for (Mask u : f) {
    if (subset_of(a, u)) above.push_back(u);
  }
  if (width_out) *width_out = 0;
  if (above.empty()) return f.union_all();
  Poset q = Poset::inclusion(above);
  ElementSet top = maximal_sperner_antichain(q);
  if (width_out) *width_out = top.size();
  Mask out = ~Mask{0};
  for (std::size_t i : top) out &= above[i];
  return out;
}

}  // namespace

Mask sperner_closure(const SetFamily& f, Mask a) {
  if (!subset_of(a, f.union_all())) throw InputError("set is not inside the union of the family");
  return sperner_closure_of(f, a, nullptr);
}

std::map<std::size_t, SetFamily> sc_layers(const SetFamily& f) {
  const Mask x = f.union_all();
  if (popcount(x) > 20) throw Refusal("closure layers enumerate all subsets of the union; at most 20 elements");
  std::map<std::size_t, std::vector<Mask>> raw;
  for (Mask a = x;; a = (a - 1) & x) {
    std::size_t w = 0;
    Mask c = sperner_closure_of(f, a, &w);
    if (w > 0) raw[w].push_back(c);
    if (a == 0) break;
  }
  std::map<std::size_t, SetFamily> out;
  for (auto& [r, sets] : raw) out.emplace(r, SetFamily(f.ground(), std::move(sets)));
  return out;
}

SetFamily sc_family(const SetFamily& f) {
  const Mask x = f.union_all();
  if (popcount(x) > 20) throw Refusal("closure family enumerates all subsets of the union; at most 20 elements");
  std::vector<Mask> out;
  for (Mask a = x;; a = (a - 1) & x) {
    out.push_back(sperner_closure_of(f, a, nullptr));
    if (a == 0) break;
  }
  return SetFamily(f.ground(), std::move(out));
}

}  // namespace orderkit
