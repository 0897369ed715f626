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
#include <vector>

#include "orderkit/family.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Sorted list of poset elements.
using ElementSet = std::vector<std::size_t>;

/// [A): everything above some element of A.
ElementSet filter_of(const Poset& p, const ElementSet& a);
/// A ≤ B in the filter order, i.e. [A) ⊇ [B).
bool filter_leq(const Poset& p, const ElementSet& a, const ElementSet& b);

/// Minimal elements of A ∪ B.  Throws InputError if A or B is not an antichain.
ElementSet antichain_meet(const Poset& p, const ElementSet& a, const ElementSet& b);
/// Minimal elements of [A) ∩ [B).
ElementSet antichain_join(const Poset& p, const ElementSet& a, const ElementSet& b);

/// Every antichain, ordered by the size of its down-set, then lexicographically.
std::vector<ElementSet> all_antichains(const Poset& p);

/// Smallest i ≥ -1 such that every antichain B ⊆ [A) with B ⊄ A has
/// |B| ≤ |A| + i.
int class_index(const Poset& p, const ElementSet& a);
bool is_maximal_r_antichain(const Poset& p, const ElementSet& a);

/// The filter-order maximum among maximum-size antichains.
ElementSet maximal_sperner_antichain(const Poset& p);

/// All non-empty maximal r-antichains, in all_antichains order.
std::vector<ElementSet> maximal_star_antichains(const Poset& p);
std::vector<ElementSet> maximal_r_antichains(const Poset& p, std::size_t r);
/// Union of all maximal *-antichains.
ElementSet star_union(const Poset& p);

struct SequenceCheck {
  bool hypotheses = false;  // equal sizes, pairwise incomparable, later maximal over earlier
  std::size_t length = 0;
  std::uint64_t bound = 0;  // C(w, r)
  bool within_bound = false;
};
SequenceCheck incomparable_sequence_check(const Poset& p, const std::vector<ElementSet>& seq);

/// Intersection of the maximal Sperner antichain of F_{⊇A}; ∪F when no
/// member contains A.
Mask sperner_closure(const SetFamily& f, Mask a);
/// r ↦ SC_r(F) for r ≥ 1, over all A ⊆ ∪F (at most 20 elements).
std::map<std::size_t, SetFamily> sc_layers(const SetFamily& f);
/// SC(F), including the value ∪F for sets no member contains.
SetFamily sc_family(const SetFamily& f);

}  // namespace orderkit
