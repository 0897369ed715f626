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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orderkit/family.hpp"

namespace orderkit {

// Union-closed families containing ∅ throughout; J(F) is the set of
// non-empty generators.

/// Non-empty generators of a union-closed family.
std::vector<Mask> nonempty_generators(const SetFamily& f);

/// Union closure of the given edges plus ∅; every edge has at most 2 points.
SetFamily graph_family(int ground, const std::vector<Mask>& edges);

/// ∪{V ∈ J(F) : V ⊆ X}.
Mask pi_closure(const SetFamily& f, Mask x);
/// X ∖ π_F(X).
Mask isolated(const SetFamily& f, Mask x);

/// {A ∪ B : A ∈ F, B ∈ H}.
SetFamily family_join(const SetFamily& f, const SetFamily& h);
/// F′ = F ∨ H for some non-empty union-closed H avoiding U.
bool is_extension(const SetFamily& f, Mask u, const SetFamily& f_prime);

/// Subsets Y ⊆ U with π(X∪Y) ∩ U = Y and π(X∪Y) ⊇ π(X∪U) ∖ U.
SetFamily escape_set(const SetFamily& f, Mask u, Mask x);
/// Same set through the generator conditions; used as a cross-check.
SetFamily escape_set_by_generators(const SetFamily& f, Mask u, Mask x);

/// Σ_{X ∈ F′∖U} |E(X)| / |F′∖U|.  Throws InputError unless F′ extends (F, U).
Rational mu(const SetFamily& f, const SetFamily& f_prime, Mask u);

/// N_F(X) = X ∪ ∪{V ∈ J(F) : V ∩ X ≠ ∅}.
Mask neighborhood(const SetFamily& f, Mask x);
struct Neighborhoods {
  Mask n = 0;   // N_F(X)
  Mask n2 = 0;  // N_F(N_F(X))
};
Neighborhoods neighborhoods(const SetFamily& f, Mask x);

enum class MuSearch {
  kExhaustive,  // every non-empty filter of 2^{N²∖U}; |N²∖U| ≤ 5
  kParametric,  // exact minimum by parametric min-cut; |N²∖U| ≤ 12
};
struct MinMu {
  bool found = false;  // false only when only_unit_minimal excludes every filter
  Rational value = 0;
  SetFamily witness;  // the filter H, as subsets of N²∖U
  std::size_t filters_examined = 0;
};
/// Minimum of μ over extensions F ∨ H with H a non-empty filter of
/// 2^{N²∖U}.  With only_unit_minimal, the exhaustive search skips filters
/// having a minimal member X with |E(X)| ≠ 1.
MinMu min_mu_over_extensions(const SetFamily& f, Mask u, MuSearch method = MuSearch::kParametric,
                             bool only_unit_minimal = false);

/// 𝓔(Y, x): subsets X of N²∖U with an edge {x, y} ∈ J(F), y ∈ X ∪ Y or y = x.
SetFamily escape_filter(const SetFamily& f, Mask u, Mask y, int x);

struct NuBound {
  Rational value = 0;
  Mask n_a = 0, n_b = 0, n_ab = 0;
  std::map<int, std::size_t> n_of_x;              // |A(x)| for x ∈ N ∖ U
  std::map<std::pair<Mask, int>, Rational> nu;    // ν(𝓔(Y, x)), Y ⊊ U
};
/// 1 + Σ_{Y⊊U} Π_{x∈N∖U} ν(𝓔(Y, x)).  U must be a 2-element generator and
/// every generator meeting N_F(U) must have at most 2 points.
NuBound nu_lower_bound(const SetFamily& f, Mask u);

/// 1 + (1 − 2^{−n_a})^{n_b} + (1 − 2^{−n_b})^{n_a}.
Rational min_degree_bound(std::size_t n_a, std::size_t n_b);

struct MinDegreeCheck {
  bool hypotheses = false;
  std::optional<Mask> violating_edge;
  std::size_t n_a = 0, n_b = 0;
  Rational bound = 0;  // 1 + c1 + c2, or 2 when n_a or n_b is 0
  Rational direct_density = 0;  // |F_{⊇U}| / |F|
  bool certified = false;       // hypotheses hold and bound ≥ 2
  bool consistent = true;       // certified ⇒ direct density ≤ 1/2
};
/// Degree condition on the edges meeting U, relative to a simple graph
/// G′ ⊆ J(F) (default: all 2-element generators).
MinDegreeCheck min_degree_density_check(const SetFamily& f, Mask u,
                                        const std::optional<std::vector<Mask>>& simple_graph = std::nullopt);

struct ElementDensity {
  Rational min_density = 0;
  int min_x = -1;
  Rational max_density = 0;
  int max_x = -1;
  bool holds = false;  // some element lies in at least half the members
};
ElementDensity ucsc_brute(const SetFamily& f);

struct UcscSweep {
  std::size_t instances = 0;
  std::size_t violations = 0;
};
/// Every union-closed family with at least 2 members on ≤ max_domain points, up to isomorphism.
UcscSweep ucsc_sweep(int max_domain);

}  // namespace orderkit
