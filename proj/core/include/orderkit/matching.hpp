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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderkit/lattice.hpp"

namespace orderkit {

// Maps P → L are OrderMaps holding element indices of a host lattice L.  A
// sub-structure (ideal, join-subsemilattice) is passed as a list of allowed
// host elements; an empty list means all of L.
using ElementList = std::vector<std::size_t>;

std::vector<OrderMap> lattice_maps(const Semilattice& l, const Poset& p, const ElementList& allowed = {},
                                   std::size_t limit = 1'000'000);

/// {x : f(x) ≥ a} as a mask over P.
Mask type_of(const Semilattice& l, std::size_t a, const OrderMap& f);

/// One entry per filter of P (possibly empty).  Throws InputError unless a is
/// join-irreducible or the least element.
std::map<Mask, std::vector<OrderMap>> type_partition(const Semilattice& l, const Poset& p, std::size_t a,
                                                     const ElementList& allowed = {},
                                                     std::size_t limit = 1'000'000);
std::map<Mask, std::uint64_t> type_counts(const Semilattice& l, const Poset& p, std::size_t a,
                                          const ElementList& allowed = {}, std::size_t limit = 1'000'000);

enum class Direction { kDecreasing, kIncreasing };

/// Injective map T(L^P, from, a) → T(L^P, to, a), as explicit pairs.
struct Matching {
  Direction direction = Direction::kDecreasing;
  Mask from = 0;
  Mask to = 0;
  std::vector<std::pair<OrderMap, OrderMap>> pairs;
};

struct MatchingCheck {
  bool ok = true;
  std::string reason;
};

/// Domain is exactly T(from), images lie in T(to), injective, pointwise
/// comparable in the stated direction.
MatchingCheck validate_matching(const Semilattice& l, const Poset& p, std::size_t a, const Matching& m,
                                const ElementList& allowed = {}, std::size_t limit = 1'000'000);
/// f(x) = σ(f)(x) ∨ a on `from` and f(x) = σ(f)(x) elsewhere.
bool is_a_invertible(const Semilattice& l, std::size_t a, const Matching& m);
/// second ∘ first; throws InputError when the types do not chain.
Matching compose(const Matching& first, const Matching& second);
/// Looks up σ(f); throws InputError if f is outside the domain.
const OrderMap& image_of(const Matching& m, const OrderMap& f);

enum class MatchKind { kFull, kTop, kWeak };
const char* match_kind_name(MatchKind kind, Direction dir);

struct MatchingDecision {
  bool holds = false;
  std::optional<std::size_t> a;  // the tested or witnessing join-irreducible
  // First failing filter pair and its certificate.
  Mask fail_from = 0;
  Mask fail_to = 0;
  std::uint64_t fail_from_count = 0;
  std::uint64_t fail_to_count = 0;
  std::vector<OrderMap> hall_violator;  // subset of T(fail_from) with too few partners
  std::vector<Matching> matchings;      // one per required pair when holds (not for kWeak)
};

/// Decides (L, a) ∈ MP{f,t,w}(P) (down or up) exactly.  Refuses when L^P
/// has more than `limit` maps.
MatchingDecision decide_matching_property(const Semilattice& l, const Poset& p, std::size_t a, MatchKind kind,
                                          Direction dir, std::size_t limit = 1'000'000);
/// Existential version over all candidates a (least element included for
/// the downward kinds, proper join-irreducibles only for upward kinds).
MatchingDecision decide_matching_property(const Semilattice& l, const Poset& p, MatchKind kind, Direction dir,
                                          std::size_t limit = 1'000'000);

/// σ(f) = f on F and f ∧ c off F, from T(P, a) to T(F, a).  Requires a
/// lower semimodular coatom c and a join-irreducible a not below c.
Matching matching_lsm(const Semilattice& l, std::size_t c, std::size_t a, const Poset& p, Mask f_filter);

/// σ_1..σ_n for P = chain(n): σ_k maps T([k,n]) to T([k+1,n]) (0-based masks
/// bits k-1..n-1 to bits k..n-1).  Independent sets are chosen greedily by
/// atom index.
std::vector<Matching> matching_geometric(const Semilattice& l, std::size_t a, std::size_t n);
/// Same chain using σ_k(f)(k) = f(k) ∧ γ(f(k-1)) with γ the smallest-index
/// coatom above its argument and not above a.
std::vector<Matching> matching_dual_geometric(const Semilattice& l, std::size_t a, std::size_t n);
/// Composes steps i..j-1 of a chain of matchings: T([i,n]) → T([j,n]).
Matching chain_composite(const std::vector<Matching>& steps, std::size_t i, std::size_t j);

/// Ideals of Q, a = (x] with x maximal: σ(f)(u) = f(u) ∖ {x} on F ∖ G.  With
/// kIncreasing, x must be minimal and σ(f)(u) = f(u) ∪ {x} on G ∖ F.
Matching ideal_lattice_matching(const Semilattice& ideals_of_q, const Poset& q, std::size_t x, const Poset& p,
                                Mask from, Mask to, Direction dir);

/// (σ + ρ) on P + Q, P's elements first.
Matching matching_sum(const Matching& sigma, const Matching& rho, std::size_t p_size);
/// Restriction of the domain to maps into the ideal.
Matching restrict_to_ideal(const Semilattice& l, const Matching& sigma, const ElementList& ideal);
/// σ'(f) = ⟨σ(π1∘f), π2∘f⟩ on (L × M)^P with a' = ⟨a, 0̂⟩.
Matching lift_product(const Semilattice& l, const Semilattice& m, const Poset& p, const Matching& sigma);

/// Elements of a union-closed family (labelled lattice) forming N²(a).
ElementList second_neighborhood(const Semilattice& l, std::size_t a);
/// Elements of N(a), the join-subsemilattice generated by ∅ and the
/// generators meeting a.
ElementList first_neighborhood(const Semilattice& l, std::size_t a);
Matching restrict_to_neighborhood(const Semilattice& l, const Matching& sigma, std::size_t a);
/// σ(f)(x) = π_B(f(x)) ∪ σ'(π_{L'}∘f)(x) where B are the generators disjoint
/// from a.  L' must be a join-subsemilattice containing N(a).
Matching lift_from_neighborhood(const Semilattice& l, const ElementList& sub, const Poset& p, std::size_t a,
                                const Matching& sigma_sub);

}  // namespace orderkit
