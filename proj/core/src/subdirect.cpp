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

#include "orderkit/subdirect.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orderkit {

namespace {

std::set<std::size_t> as_set(const ElementList& s) { return {s.begin(), s.end()}; }

std::size_t least_of(const Semilattice& l, const ElementList& s) {
  std::size_t acc = s.front();
  for (std::size_t v : s) acc = l.meet(acc, v);
  return acc;
}

}  // namespace

bool is_subsemilattice(const Semilattice& l, const ElementList& s) {
  if (s.empty()) return false;
  auto in = as_set(s);
  for (std::size_t u : s) {
    if (u >= l.size()) return false;
    for (std::size_t v : s) {
      if (!in.count(l.meet(u, v))) return false;
    }
  }
  return true;
}

bool is_meet_concave(const Semilattice& l1, const Semilattice& l2, const SubMap& f) {
  if (f.size() != l1.size()) throw InputError("map must list a subsemilattice for every element");
  std::vector<std::set<std::size_t>> sets;
  for (const auto& s : f) sets.push_back(as_set(s));
  for (std::size_t u = 0; u < l1.size(); ++u) {
    for (std::size_t v = 0; v < l1.size(); ++v) {
      const auto& target = sets[l1.meet(u, v)];
      for (std::size_t x : f[u]) {
        for (std::size_t y : f[v]) {
          if (!target.count(l2.meet(x, y))) return false;
        }
      }
    }
  }
  return true;
}

bool is_antitone(const Semilattice& l1, const SubMap& f) {
  for (std::size_t u = 0; u < l1.size(); ++u) {
    for (std::size_t v = 0; v < l1.size(); ++v) {
      if (!l1.leq(u, v)) continue;
      auto big = as_set(f[u]);
      for (std::size_t x : f[v]) {
        if (!big.count(x)) return false;
      }
    }
  }
  return true;
}

Bowtie bowtie(const Semilattice& l1, const Semilattice& l2, const SubMap& f) {
  if (f.size() != l1.size()) throw InputError("map must list a subsemilattice for every element");
  for (const auto& s : f) {
    if (!is_subsemilattice(l2, s)) throw InputError("some image is not a subsemilattice");
  }
  if (!is_meet_concave(l1, l2, f)) throw InputError("map is not meet-concave");
  Bowtie b;
  std::set<std::size_t> covered;
  for (std::size_t u = 0; u < l1.size(); ++u) {
    ElementList s = f[u];
    std::sort(s.begin(), s.end());
    for (std::size_t v : s) {
      b.pairs.emplace_back(u, v);
      covered.insert(v);
    }
  }
  b.subdirect = covered.size() == l2.size();
  const auto& pr = b.pairs;
  Poset order = Poset::from_relation(pr.size(), [&](std::size_t i, std::size_t j) {
    return l1.leq(pr[i].first, pr[j].first) && l2.leq(pr[i].second, pr[j].second);
  });
  b.lattice = Semilattice::from_poset(order);
  return b;
}

IotaMaps iota_maps(const Semilattice& l1, const Semilattice& l2, const std::vector<ElementPair>& pairs) {
  IotaMaps out;
  out.iota1.resize(l1.size());
  out.iota2.resize(l2.size());
  for (auto [u, v] : pairs) {
    out.iota1.at(u).push_back(v);
    out.iota2.at(v).push_back(u);
  }
  for (auto& s : out.iota1) {
    if (s.empty()) throw InputError("first projection is not onto");
    std::sort(s.begin(), s.end());
    out.lower1.push_back(least_of(l2, s));
  }
  for (auto& s : out.iota2) {
    if (s.empty()) throw InputError("second projection is not onto");
    std::sort(s.begin(), s.end());
    out.lower2.push_back(least_of(l1, s));
  }
  return out;
}

bool is_full_subdirect(const Semilattice& l1, const Semilattice& l2, const Bowtie& b) {
  if (!b.subdirect) return false;
  const auto& l = b.lattice;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      std::size_t w = l.join_or_none(i, j);
      if (w == Semilattice::kNone) continue;
      std::size_t u = l1.join_or_none(b.pairs[i].first, b.pairs[j].first);
      std::size_t v = l2.join_or_none(b.pairs[i].second, b.pairs[j].second);
      if (b.pairs[w] != ElementPair{u, v}) return false;
    }
  }
  return true;
}

ElementList lub_generate(const Semilattice& l, const ElementList& a) {
  std::set<std::size_t> seen{l.bottom()};
  std::vector<std::size_t> frontier{l.bottom()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t u : frontier) {
      for (std::size_t x : a) {
        std::size_t j = l.join_or_none(u, x);
        if (j != Semilattice::kNone && seen.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::size_t project(const Semilattice& l, const ElementList& a, std::size_t u) {
  std::size_t acc = l.bottom();
  for (std::size_t x : a) {
    if (l.leq(x, u)) acc = l.join_or_none(acc, x);
  }
  return acc;
}

InternalDecomposition internal_decompose(const Semilattice& l, const ElementList& a1, const ElementList& a2) {
  auto s1 = as_set(a1), s2 = as_set(a2);
  for (std::size_t j : l.join_irreducibles()) {
    if (!s1.count(j) && !s2.count(j)) throw InputError("the two parts do not cover the join-irreducibles");
  }
  InternalDecomposition out;
  out.part1 = lub_generate(l, a1);
  out.part2 = lub_generate(l, a2);
  std::set<ElementPair> images;
  for (std::size_t u = 0; u < l.size(); ++u) {
    out.embedding.emplace_back(project(l, out.part1, u), project(l, out.part2, u));
    images.insert(out.embedding.back());
  }
  out.injective = images.size() == l.size();
  out.meet_homomorphism = true;
  for (std::size_t u = 0; u < l.size() && out.meet_homomorphism; ++u) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      auto m = out.embedding[l.meet(u, v)];
      auto pu = out.embedding[u], pv = out.embedding[v];
      if (m.first != l.meet(pu.first, pv.first) || m.second != l.meet(pu.second, pv.second)) {
        out.meet_homomorphism = false;
        break;
      }
    }
  }
  return out;
}

std::size_t lifted_irreducible(const Bowtie& b, const Semilattice& l2, std::size_t a) {
  ElementList fa;
  for (auto [u, v] : b.pairs) {
    if (u == a) fa.push_back(v);
  }
  if (fa.empty()) throw InputError("element has an empty fibre");
  ElementPair target{a, least_of(l2, fa)};
  auto it = std::find(b.pairs.begin(), b.pairs.end(), target);
  return static_cast<std::size_t>(it - b.pairs.begin());
}

Matching lift_subdirect(const Semilattice& l1, const Bowtie& b, const Poset& p, std::size_t a,
                        const Matching& sigma) {
  if (sigma.direction != Direction::kDecreasing) throw InputError("expects a decreasing matching");
  SubMap f(l1.size());
  for (auto [u, v] : b.pairs) f[u].push_back(v);
  if (!is_antitone(l1, f)) throw InputError("the fibre map is not antitone");
  std::map<ElementPair, std::size_t> index;
  for (std::size_t i = 0; i < b.pairs.size(); ++i) index[b.pairs[i]] = i;
  (void)a;
  // T(L^P, F, ⟨a, ι(a)⟩) consists of the maps whose first coordinate lies in
  // T(L1^P, F, a); enumerate L^P and keep those.
  std::set<OrderMap> sources;
  for (const auto& pr : sigma.pairs) sources.insert(pr.first);
  Matching out{sigma.direction, sigma.from, sigma.to, {}};
  for (const OrderMap& g : lattice_maps(b.lattice, p)) {
    OrderMap first(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) first[x] = static_cast<std::uint32_t>(b.pairs[g[x]].first);
    if (!sources.count(first)) continue;
    const OrderMap& moved = image_of(sigma, first);
    OrderMap image(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      auto it = index.find({moved[x], b.pairs[g[x]].second});
      if (it == index.end()) throw std::logic_error("lifted value leaves the bowtie");
      image[x] = static_cast<std::uint32_t>(it->second);
    }
    out.pairs.emplace_back(g, std::move(image));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace orderkit
