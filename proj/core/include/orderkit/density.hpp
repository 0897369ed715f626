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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orderkit/lattice.hpp"

namespace orderkit {

/// Number of filters of P.
std::uint64_t filter_count(const Poset& p);

/// |[a)^P| / |L^P|.
Rational p_density(const Semilattice& l, const Poset& p, std::size_t a);

struct DensityWitness {
  bool holds = false;
  std::optional<std::size_t> a;  // least-density proper join-irreducible
  Rational density = 0;
  std::uint64_t p = 0;
};
/// Some proper join-irreducible has P-density at most 1/p.
DensityWitness density_property(const Semilattice& l, const Poset& p);

/// c_i = number of chains with i+1 elements, i = 0..height.
std::vector<std::uint64_t> chain_counts(const Poset& p);
/// |P^{[m+1]}| through the chain counts.
std::uint64_t zeta(const Poset& p, std::uint64_t m);

struct ThresholdResult {
  std::optional<std::size_t> m;  // empty: the property fails at n_max
  std::vector<bool> holds;       // holds[n-1] for n = 1..n_max
};
/// Smallest m with the [n]-density property for every n in [m, n_max].
ThresholdResult density_threshold(const Semilattice& l, std::size_t n_max);

/// max{kn − p^{k−1}(k(p−1) − p) : k ≥ 1, p^{k−1}(p−1) ≤ n}, or 1 when n < p−1.
BigInt m_bound(std::uint64_t n, std::uint64_t p);
/// Largest index k attaining m_bound (0 when n < p−1).
std::uint64_t m_bound_argmax(std::uint64_t n, std::uint64_t p);
/// Semilattice variant with δ_0..δ_K supplied; max over 2 ≤ k ≤ K.  Refuses
/// if a larger k could still qualify.  0 when no k qualifies.
BigInt m_circ_bound(std::uint64_t n, std::uint64_t p, const std::vector<BigInt>& delta);
/// Same, with p and the δ table computed from P.
BigInt m_circ_bound(std::uint64_t n, const Poset& p);
/// δ_k = |B_k^P| − |(B_k ∖ {1̂})^P|, counted.
BigInt delta(std::size_t k, const Poset& p);
/// (⌈(n−1)/(p−1)⌉ + 1)(p − 1) + 1 for n ≥ 1.
std::uint64_t g_formula(std::uint64_t n, std::uint64_t p);

enum class SmallKind { kHLower, kHUpper, kGLower };
struct SmallExtremum {
  std::optional<std::uint64_t> value;  // empty when no semilattice qualifies
  SetFamily witness;                   // intersection-closed representation
  std::size_t examined = 0;
};
/// Exhaustive over semilattices with at most max_domain join-irreducibles
/// (intersection-closed families up to isomorphism, max_domain ≤ 4).
/// kGLower only considers non-trivial semilattices.
SmallExtremum h_small(SmallKind kind, const Poset& p, std::uint64_t n, int max_domain = 4);

struct MultiLatticeCheck {
  bool hypothesis = false;
  std::optional<std::size_t> violating_a;
  BigInt total = 0;
  BigInt bound = 0;
  bool conclusion = false;
};
/// alpha[i] is the multiplicity of lattice_maps(l, p)[i].  Lattices use
/// m_bound and require α(1̂) = 1; semilattices without a top use
/// m_circ_bound.
MultiLatticeCheck multilattice_bound_check(const Semilattice& l, const Poset& p,
                                           const std::vector<std::uint64_t>& alpha, std::uint64_t n);

}  // namespace orderkit
