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
#include <vector>

#include "orderkit/family.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Finite meet-semilattice with a least element.  Joins are stored where
/// they exist; is_lattice() is true when every pair has one.
class Semilattice {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Semilattice() = default;

  /// Throws InputError if some pair lacks a greatest lower bound.
  static Semilattice from_poset(const Poset& order, std::vector<Mask> labels = {});
  /// Members under inclusion; labels are the members.
  static Semilattice from_family(const SetFamily& f);

  std::size_t size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  bool leq(std::size_t u, std::size_t v) const { return order_.leq(u, v); }
  std::size_t meet(std::size_t u, std::size_t v) const { return meet_[u * size() + v]; }
  /// kNone when u and v have no common upper bound.
  std::size_t join_or_none(std::size_t u, std::size_t v) const { return join_[u * size() + v]; }
  /// Throws InputError when the join does not exist.
  std::size_t join(std::size_t u, std::size_t v) const;
  bool is_lattice() const { return lattice_; }

  std::size_t bottom() const { return bottom_; }
  std::optional<std::size_t> top() const;

  /// Proper join-irreducibles: exactly one lower cover.
  std::vector<std::size_t> join_irreducibles() const;
  bool is_join_irreducible(std::size_t u) const;
  /// The unique element covered by a join-irreducible.
  std::size_t lower_cover(std::size_t a) const;
  /// Exactly one upper cover.
  std::vector<std::size_t> meet_irreducibles() const;
  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> coatoms() const;

  /// Set labels when built from a family; empty otherwise.
  const std::vector<Mask>& labels() const { return labels_; }
  std::size_t index_of(Mask label) const;

  /// Requires a lattice.
  Semilattice dual() const;
  /// Adds a greatest element if there is none; the new element is last.
  Semilattice completion() const;
  /// Subset closed under meets and containing the least element, renumbered
  /// in the listed order.  Throws InputError otherwise.
  Semilattice sub(const std::vector<std::size_t>& elements) const;

 private:
  Poset order_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<Mask> labels_;
  std::size_t bottom_ = 0;
  bool lattice_ = false;
};

Semilattice boolean_lattice(int n);
/// Least element plus n pairwise incomparable atoms.
Semilattice m_flat(int n);
/// m_flat(n) with a greatest element adjoined.
Semilattice m_hat(int n);
Semilattice chain_lattice(std::size_t n);
/// Unions of the five edges of the pentagon, plus ∅ (17 members).
Semilattice pentagon_lattice();
/// Down-sets of q under inclusion, labelled by their masks.
Semilattice ideal_lattice(const Poset& q);
/// Pairs ordered componentwise; element (u, v) has index u*|M| + v.
Semilattice lattice_product(const Semilattice& l, const Semilattice& m);

struct PowerLattice {
  Semilattice lattice;
  std::vector<OrderMap> maps;  // maps[i] is element i
};
/// Order-preserving maps P → L, ordered pointwise.
PowerLattice lattice_power(const Semilattice& l, const Poset& p, std::size_t limit = 100'000);

/// u such that for every v covering u and every w, v∧w covers u∧w or equals it.
bool is_lower_semimodular_element(const Semilattice& l, std::size_t u);
bool is_lower_semimodular(const Semilattice& l);
/// Upper covering condition over all cover pairs; requires a lattice.
bool is_upper_semimodular(const Semilattice& l);
bool is_atomic(const Semilattice& l);
bool is_coatomic(const Semilattice& l);
bool is_geometric(const Semilattice& l);
/// Coatomic and lower semimodular.
bool is_dual_geometric(const Semilattice& l);
bool is_distributive(const Semilattice& l);
std::size_t lattice_height(const Semilattice& l);

/// Members: for each u, the positions i with join_irreducibles()[i] ≤ u.
SetFamily canonical_intersection_rep(const Semilattice& l);
/// Members: for each u, the positions i with meet_irreducibles()[i] not ≥ u.
/// Requires a lattice.
SetFamily canonical_union_rep(const Semilattice& l);

struct IrredundantRep {
  std::vector<Mask> irreducibles;  // join-irreducible members a
  std::vector<int> points;         // points[i] = p(a_i) ∈ a_i ∖ c(a_i)
  SetFamily restricted;            // {U ∩ image(p)}
};
/// Throws InputError unless f is intersection-closed.
IrredundantRep irredundant_rep(const SetFamily& f);

/// Lattice neighborhoods of U in a union-closed family containing ∅.
/// Index 0 is the ideal below U; odd indices iterate the neighborhood, even
/// indices are the ideals they generate.
SetFamily lattice_neighborhood(const SetFamily& l, Mask u, std::size_t index);
/// Join-subsemilattice generated by ∅ and the given members.
SetFamily join_generated(int ground, const std::vector<Mask>& gens);

}  // namespace orderkit
