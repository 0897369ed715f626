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

#include "orderkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orderkit {

namespace {

using Code = std::uint64_t;  // bit i*n+j set when i < j in the order

Code relation_code(const Poset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.lt(i, j)) c |= Code{1} << (perm[i] * n + perm[j]);
    }
  }
  return c;
}

Code canonical_code(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  Code best = ~Code{0};
  do {
    best = std::min(best, relation_code(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset from_code(std::size_t n, Code c) {
  return Poset::from_relation(n, [&](std::size_t i, std::size_t j) { return i == j || ((c >> (i * n + j)) & 1); });
}

}  // namespace

std::vector<Poset> posets_up_to_iso(std::size_t n) {
  if (n > 7) throw Refusal("poset enumeration is limited to 7 elements");
  if (n == 0) return {Poset::antichain(0)};
  std::vector<Poset> level{Poset::antichain(1)};
  for (std::size_t m = 1; m < n; ++m) {
    std::set<Code> seen;
    for (const Poset& p : level) {
      for (Mask ideal : ideals(p)) {
        Poset bigger = Poset::from_relation(m + 1, [&](std::size_t i, std::size_t j) {
          if (i == j) return true;
          if (j == m) return i < m && ((ideal >> i) & 1) != 0;
          if (i == m) return false;
          return p.leq(i, j);
        });
        seen.insert(canonical_code(bigger));
      }
    }
    level.clear();
    for (Code c : seen) level.push_back(from_code(m + 1, c));
  }
  return level;
}

std::vector<Semilattice> lattices_up_to_iso(std::size_t n) {
  std::vector<Semilattice> out;
  if (n <= 1) {
    if (n == 1) out.push_back(Semilattice::from_poset(Poset::chain(1)));
    return out;
  }
  // Lattices on n elements are the posets on n-2 elements with a bottom and
  // a top adjoined, whenever the result is a lattice.
  for (const Poset& q : posets_up_to_iso(n - 2)) {
    Poset p = Poset::from_relation(n, [&](std::size_t i, std::size_t j) {
      if (i == 0 || j == n - 1 || i == j) return true;
      if (j == 0 || i == n - 1) return false;
      return q.leq(i - 1, j - 1);
    });
    try {
      Semilattice l = Semilattice::from_poset(p);
      if (l.is_lattice()) out.push_back(std::move(l));
    } catch (const InputError&) {
    }
  }
  return out;
}

namespace {

std::uint16_t permute_code(std::uint16_t code, int d, const std::vector<int>& perm) {
  std::uint16_t out = 0;
  for (Mask s = 0; s < (Mask{1} << d); ++s) {
    if (!((code >> s) & 1)) continue;
    Mask t = 0;
    for (int x : elements_of(s)) t |= bit(perm[x]);
    out |= static_cast<std::uint16_t>(1u << t);
  }
  return out;
}

std::uint16_t canonical_family(std::uint16_t code, int d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint16_t best = code;
  do {
    best = std::min(best, permute_code(code, d, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::uint16_t family_canonical_code(const SetFamily& f) {
  if (f.ground() > 4) throw Refusal("canonical codes are limited to 4-element domains");
  std::uint16_t code = 0;
  for (Mask m : f) code |= static_cast<std::uint16_t>(1u << m);
  return canonical_family(code, f.ground());
}

std::vector<SetFamily> closed_families_up_to_iso(int d, Closure kind) {
  if (d < 0 || d > 4) throw Refusal("closed-family enumeration is limited to 4-element domains");
  const unsigned subsets = 1u << d;
  std::set<std::uint16_t> seen;
  for (std::uint32_t code = 1; code < (1u << subsets); ++code) {
    bool closed = true;
    for (unsigned s = 0; s < subsets && closed; ++s) {
      if (!((code >> s) & 1)) continue;
      for (unsigned t = s + 1; t < subsets; ++t) {
        if (!((code >> t) & 1)) continue;
        unsigned r = kind == Closure::kUnion ? (s | t) : (s & t);
        if (!((code >> r) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) seen.insert(canonical_family(static_cast<std::uint16_t>(code), d));
  }
  std::vector<SetFamily> out;
  for (std::uint16_t code : seen) {
    std::vector<Mask> members;
    for (Mask s = 0; s < subsets; ++s) {
      if ((code >> s) & 1) members.push_back(s);
    }
    out.emplace_back(d, std::move(members));
  }
  return out;
}

}  // namespace orderkit
