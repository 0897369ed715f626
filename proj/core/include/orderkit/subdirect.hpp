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
#include <utility>
#include <vector>

#include "orderkit/lattice.hpp"
#include "orderkit/matching.hpp"

namespace orderkit {

using ElementPair = std::pair<std::size_t, std::size_t>;
/// f(u) ⊆ L2 for every u ∈ L1, as element lists.
using SubMap = std::vector<ElementList>;

bool is_subsemilattice(const Semilattice& l, const ElementList& s);
/// f(u) ∧ f(v) ⊆ f(u ∧ v) for all u, v.
bool is_meet_concave(const Semilattice& l1, const Semilattice& l2, const SubMap& f);
/// u ≤ v implies f(u) ⊇ f(v).
bool is_antitone(const Semilattice& l1, const SubMap& f);

struct Bowtie {
  Semilattice lattice;
  std::vector<ElementPair> pairs;  // pairs[i] is element i
  bool subdirect = false;          // ∪f = L2
};
/// {⟨u, v⟩ : v ∈ f(u)} under the product order.  Throws InputError if some
/// f(u) is not a subsemilattice or f is not meet-concave.
Bowtie bowtie(const Semilattice& l1, const Semilattice& l2, const SubMap& f);

struct IotaMaps {
  SubMap iota1;                 // u ↦ {v : ⟨u, v⟩ ∈ L}
  SubMap iota2;                 // v ↦ {u : ⟨u, v⟩ ∈ L}
  std::vector<std::size_t> lower1;  // least element of iota1(u)
  std::vector<std::size_t> lower2;
};
/// L ⊆ L1 × L2 given by its pairs; throws InputError unless both
/// projections are onto.
IotaMaps iota_maps(const Semilattice& l1, const Semilattice& l2, const std::vector<ElementPair>& pairs);

/// Joins in L agree with componentwise joins in L1 × L2.
bool is_full_subdirect(const Semilattice& l1, const Semilattice& l2, const Bowtie& b);

/// G_L(A): least upper bounds of subsets of A, sorted.
ElementList lub_generate(const Semilattice& l, const ElementList& a);
/// π_A(u) = ∨((u] ∩ A).
std::size_t project(const Semilattice& l, const ElementList& a, std::size_t u);

struct InternalDecomposition {
  ElementList part1;  // G_L(A1)
  ElementList part2;  // G_L(A2)
  std::vector<ElementPair> embedding;  // u ↦ ⟨π_1(u), π_2(u)⟩
  bool injective = false;
  bool meet_homomorphism = false;
};
/// Requires A1 ∪ A2 ⊇ J(L).
InternalDecomposition internal_decompose(const Semilattice& l, const ElementList& a1, const ElementList& a2);

/// σ'(g)(x) = ⟨σ(π1∘g)(x), π2(g(x))⟩ on the bowtie of an antitone
/// meet-concave f, for the join-irreducible ⟨a, least f(a)⟩.
Matching lift_subdirect(const Semilattice& l1, const Bowtie& b, const Poset& p, std::size_t a,
                        const Matching& sigma);
/// Index of ⟨a, least element of f(a)⟩ in the bowtie.
std::size_t lifted_irreducible(const Bowtie& b, const Semilattice& l2, std::size_t a);

}  // namespace orderkit
