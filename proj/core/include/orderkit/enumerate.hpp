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
#include <vector>

#include "orderkit/family.hpp"
#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// One representative per isomorphism class of posets on n ≤ 7 elements.
/// Built by adding a maximal element above each down-set of the smaller
/// representatives; canonical form is the least relation code over all
/// permutations.
std::vector<Poset> posets_up_to_iso(std::size_t n);

/// Lattices with n ≤ 9 elements, one per isomorphism class.
std::vector<Semilattice> lattices_up_to_iso(std::size_t n);

enum class Closure { kUnion, kIntersection };

/// Non-empty families of subsets of {0..d-1} (d ≤ 4) closed under the given
/// operation, one per set-system isomorphism class.
std::vector<SetFamily> closed_families_up_to_iso(int d, Closure kind);

/// Least image of the family under all permutations of the ground set,
/// as a bit code over the 2^d subsets (d ≤ 4).
std::uint16_t family_canonical_code(const SetFamily& f);

}  // namespace orderkit
