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

#include "orderkit/density.hpp"

#include <algorithm>
#include <functional>

#include "orderkit/enumerate.hpp"
#include "orderkit/matching.hpp"

namespace orderkit {

namespace {

using Bits = Poset::Bits;

std::vector<std::size_t> members(const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t x = b.find_first(); x != Bits::npos; x = b.find_next(x)) out.push_back(x);
  return out;
}

std::uint64_t size_above(const Semilattice& l, const Poset& p, std::size_t a) {
  return count_order_maps(p, l.order().induced(members(l.order().up(a))));
}

std::uint64_t size_outside(const Semilattice& l, const Poset& p, std::size_t a) {
  Bits rest = ~l.order().up(a);
  auto elems = members(rest);
  if (elems.empty()) return p.size() == 0 ? 1 : 0;
  return count_order_maps(p, l.order().induced(elems));
}

}  // namespace

std::uint64_t filter_count(const Poset& p) { return filters(p).size(); }

Rational p_density(const Semilattice& l, const Poset& p, std::size_t a) {
  if (a >= l.size()) throw InputError("element out of range");
  return Rational(size_above(l, p, a)) / Rational(count_order_maps(p, l.order()));
}

DensityWitness density_property(const Semilattice& l, const Poset& p) {
  DensityWitness out;
  out.p = filter_count(p);
  for (std::size_t a : l.join_irreducibles()) {
    Rational d = p_density(l, p, a);
    if (!out.a || d < out.density) {
      out.a = a;
      out.density = d;
    }
  }
  out.holds = out.a && out.density * out.p <= 1;
  return out;
}

std::vector<std::uint64_t> chain_counts(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  // ends[i][x]: chains with i+1 elements whose top is x.
  std::vector<std::vector<std::uint64_t>> ends{std::vector<std::uint64_t>(n, 1)};
  auto order = linear_extension(p);
  while (true) {
    const auto& last = ends.back();
    std::vector<std::uint64_t> next(n, 0);
    bool any = false;
    for (std::size_t y : order) {
      for (std::size_t x = 0; x < n; ++x) {
        if (p.lt(x, y) && last[x]) {
          next[y] = checked_add(next[y], last[x]);
          any = true;
        }
      }
    }
    if (!any) break;
    ends.push_back(std::move(next));
  }
  std::vector<std::uint64_t> out;
  for (const auto& e : ends) {
    std::uint64_t s = 0;
    for (std::uint64_t v : e) s = checked_add(s, v);
    out.push_back(s);
  }
  return out;
}

std::uint64_t zeta(const Poset& p, std::uint64_t m) {
  if (p.size() == 0) return 0;
  auto c = chain_counts(p);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total = checked_add(total, checked_mul(c[i], binomial(m, i)));
  return total;
}

ThresholdResult density_threshold(const Semilattice& l, std::size_t n_max) {
  if (l.size() < 2) throw InputError("the trivial lattice has no density threshold");
  ThresholdResult out;
  const Poset& o = l.order();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const BigInt total = zeta(o, n - 1);
    bool ok = false;
    for (std::size_t a : l.join_irreducibles()) {
      Poset up = o.induced(members(o.up(a)));
      if (BigInt(n + 1) * BigInt(zeta(up, n - 1)) <= total) {
        ok = true;
        break;
      }
    }
    out.holds.push_back(ok);
  }
  std::size_t m = n_max + 1;
  while (m > 1 && out.holds[m - 2]) --m;
  if (m <= n_max) out.m = m;
  return out;
}

namespace {

BigInt pow_big(std::uint64_t base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt m_term(std::uint64_t k, std::uint64_t n, std::uint64_t p) {
  return BigInt(k) * n - pow_big(p, k - 1) * (BigInt(k) * (p - 1) - BigInt(p));
}

}  // namespace

BigInt m_bound(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw InputError("p must be at least 2");
  if (n < p - 1) return 1;
  BigInt best = 0;
  for (std::uint64_t k = 1; pow_big(p, k - 1) * (p - 1) <= n; ++k) best = std::max(best, m_term(k, n, p));
  return best;
}

std::uint64_t m_bound_argmax(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw InputError("p must be at least 2");
  if (n < p - 1) return 0;
  BigInt best = 0;
  std::uint64_t arg = 0;
  for (std::uint64_t k = 1; pow_big(p, k - 1) * (p - 1) <= n; ++k) {
    BigInt v = m_term(k, n, p);
    if (v >= best) {
      best = v;
      arg = k;
    }
  }
  return arg;
}

BigInt m_circ_bound(std::uint64_t n, std::uint64_t p, const std::vector<BigInt>& delta) {
  if (p < 2) throw InputError("p must be at least 2");
  BigInt best = 0;
  const std::size_t kmax = delta.empty() ? 0 : delta.size() - 1;
  for (std::size_t k = 2; k <= kmax; ++k) {
    BigInt cost = pow_big(p, k - 1) * (p - 1) - delta[k] + delta[k - 1];
    if (cost > n) continue;
    BigInt v = m_term(k, n, p) + BigInt(k - 1) * delta[k] - BigInt(k) * delta[k - 1];
    best = std::max(best, v);
  }
  // δ_k ≤ (p−1)^k and δ_{k−1} ≥ 0, so the cost at K+1 is at least this.
  const std::size_t next = kmax + 1;
  if (next >= 2 && pow_big(p, next - 1) * (p - 1) - pow_big(p - 1, next) <= n) {
    throw Refusal("delta table too short for this n");
  }
  return best;
}

BigInt m_circ_bound(std::uint64_t n, const Poset& p) {
  const std::uint64_t pf = filter_count(p);
  if (pf < 2) throw InputError("P must be non-empty");
  std::vector<BigInt> d;
  for (std::size_t k = 0;; ++k) {
    d.push_back(delta(k, p));
    if (k >= 2 && pow_big(pf, k) * (pf - 1) - pow_big(pf - 1, k + 1) > n) break;
  }
  return m_circ_bound(n, pf, d);
}

BigInt delta(std::size_t k, const Poset& p) {
  if (k > 6) throw Refusal("delta is counted directly; k at most 6");
  Semilattice b = boolean_lattice(static_cast<int>(k));
  std::vector<std::size_t> rest;
  for (std::size_t u = 0; u < b.size(); ++u) {
    if (u != *b.top()) rest.push_back(u);
  }
  BigInt all = count_order_maps(p, b.order());
  BigInt without = rest.empty() ? BigInt(p.size() == 0 ? 1 : 0) : BigInt(count_order_maps(p, b.order().induced(rest)));
  return all - without;
}

std::uint64_t g_formula(std::uint64_t n, std::uint64_t p) {
  if (n < 1 || p < 2) throw InputError("needs n ≥ 1 and p ≥ 2");
  std::uint64_t m = (n - 1 + (p - 2)) / (p - 1);
  return (m + 1) * (p - 1) + 1;
}

SmallExtremum h_small(SmallKind kind, const Poset& p, std::uint64_t n, int max_domain) {
  SmallExtremum out;
  for (const SetFamily& f : closed_families_up_to_iso(max_domain, Closure::kIntersection)) {
    Semilattice l = Semilattice::from_family(f);
    // The one-element semilattice meets the g condition vacuously.
    if (kind == SmallKind::kGLower && f.size() < 2) continue;
    ++out.examined;
    const std::uint64_t total = count_order_maps(p, l.order());
    bool ok = true;
    std::vector<std::size_t> tested = l.join_irreducibles();
    if (kind != SmallKind::kGLower) tested.push_back(l.bottom());
    for (std::size_t a : tested) {
      switch (kind) {
        case SmallKind::kHLower:
          ok = size_above(l, p, a) >= n;
          break;
        case SmallKind::kHUpper:
          ok = total - size_above(l, p, a) <= n;
          break;
        case SmallKind::kGLower:
          ok = size_outside(l, p, a) >= n;
          break;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    bool better = !out.value || (kind == SmallKind::kHUpper ? total > *out.value : total < *out.value);
    if (better) {
      out.value = total;
      out.witness = f;
    }
  }
  return out;
}

MultiLatticeCheck multilattice_bound_check(const Semilattice& l, const Poset& p,
                                           const std::vector<std::uint64_t>& alpha, std::uint64_t n) {
  auto maps = lattice_maps(l, p);
  if (alpha.size() != maps.size()) throw InputError("one multiplicity per map is required");
  if (std::any_of(alpha.begin(), alpha.end(), [](std::uint64_t v) { return v == 0; })) {
    throw InputError("multiplicities must be positive");
  }
  const std::uint64_t pf = filter_count(p);
  MultiLatticeCheck out;
  auto t = l.top();
  if (t) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (std::all_of(maps[i].begin(), maps[i].end(), [&](std::uint32_t v) { return v == *t; }) && alpha[i] != 1) {
        throw InputError("the top map must have multiplicity 1");
      }
    }
  }
  for (std::uint64_t v : alpha) out.total += v;
  out.hypothesis = true;
  for (std::size_t a : l.join_irreducibles()) {
    BigInt outside = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (type_of(l, a, maps[i]) != low_bits(static_cast<int>(p.size()))) outside += alpha[i];
    }
    if (outside > n) {
      out.hypothesis = false;
      out.violating_a = a;
      break;
    }
  }
  out.bound = t ? m_bound(n, pf) : m_circ_bound(n, p);
  out.conclusion = out.total <= out.bound;
  return out;
}

}  // namespace orderkit
