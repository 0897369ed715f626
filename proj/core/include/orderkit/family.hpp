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
#include <optional>
#include <utility>
#include <vector>

#include "orderkit/common.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Distinct subsets of {0..ground-1}, kept sorted by mask value.
class SetFamily {
 public:
  SetFamily() = default;
  /// Sorts and deduplicates; throws InputError if a member leaves the ground set.
  SetFamily(int ground, std::vector<Mask> members);

  int ground() const { return ground_; }
  Mask ground_mask() const { return low_bits(ground_); }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask u) const;

  /// Union of all members (0 for the empty family).
  Mask union_all() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const SetFamily& other) const = default;

 private:
  int ground_ = 0;
  std::vector<Mask> members_;
};

enum class Restriction { kSubsetOf, kSupersetOf, kIntersect, kMinus };

/// Table of restrictions: F_{⊆X}, F_{⊇X}, {U∩X}, {U∖X}.
SetFamily restrict(const SetFamily& f, Mask x, Restriction mode);

/// Largest antichain of sets under inclusion, as member masks.
std::vector<Mask> max_antichain(const std::vector<Mask>& sets);
std::size_t family_width(const std::vector<Mask>& sets);
Poset inclusion_poset(const SetFamily& f);

/// Width of the members containing x.
std::size_t width_degree(const SetFamily& f, int x);

struct WidthCheck {
  bool ok = true;
  /// On failure, k+1 pairwise incomparable members sharing an element.
  std::vector<Mask> witness;
};
WidthCheck check_locally_k_wide(const SetFamily& f, std::size_t k);
bool is_locally_k_wide(const SetFamily& f, std::size_t k);

/// Elements x of A such that every member containing x is comparable to A.
Mask center(const SetFamily& f, Mask a);
bool is_centered(const SetFamily& f);
/// Centered, contains X = ∪F and every singleton of X, locally k-wide.
bool is_pseudotree(const SetFamily& f, std::size_t k);
bool contains_union_and_singletons(const SetFamily& f);

/// Non-empty members, pairwise comparable or disjoint.
bool is_forest(const SetFamily& f);
/// Forest containing X = ∪F and the singletons of X.
bool is_tree(const SetFamily& f);

struct TreeIdentity {
  std::size_t size = 0;        // |F|
  std::size_t excess_sum = 0;  // Σ r_i over members with ≥ 2 elements
  std::size_t domain = 0;      // n = |∪F|
};
/// Throws InputError unless f is a tree.  size == 2n − 1 − excess_sum.
TreeIdentity tree_size_identity(const SetFamily& f);

/// Unions of non-empty subfamilies (∅ only if it is already a member).
SetFamily union_closure(const SetFamily& g);
SetFamily intersection_closure(const SetFamily& g);
bool is_union_closed(const SetFamily& f);
bool is_intersection_closed(const SetFamily& f);
/// Members that are not the union of the members they strictly contain.
SetFamily generators(const SetFamily& f);

bool is_filter_in(const SetFamily& f, Mask x);
/// |F| / 2^|X|; F must be an upward-closed family of subsets of X.
Rational filter_density(const SetFamily& f, Mask x);
/// ν(F∩G) ≥ ν(F)ν(G) for filters F, G of 2^X.
bool kleitman_check(const SetFamily& f, const SetFamily& g, Mask x);
/// Upward closure inside 2^X of the given sets.
SetFamily filter_generated(const std::vector<Mask>& sets, Mask x);

// Arcs of Z_n and segments of [n] (both 0-based).
/// Arc starting at i with the given length (0 gives ∅, n gives Z_n).
Mask arc(int n, int start, int length);
/// Segment {i..j}; empty when j < i.
Mask segment(int i, int j);
/// ∅, Z_n or a single cyclic run of Z_n.
bool is_arc(int n, Mask u);
bool is_segment(Mask u);
/// First element of the run; for Z_n and ∅ returns 0.
int arc_start(int n, Mask u);

}  // namespace orderkit
