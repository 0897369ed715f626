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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "orderkit/common.hpp"

namespace orderkit {

/// Finite partial order on 0..n-1.  Row i of the relation table is the
/// up-set of i; the down-sets are kept alongside.
class Poset {
 public:
  using Bits = boost::dynamic_bitset<>;
  using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

  Poset() = default;

  /// Reflexive-transitive closure of the cover pairs.  Throws InputError on
  /// a cycle or an out-of-range element.
  static Poset from_covers(std::size_t n, const std::vector<Cover>& covers);

  /// Validates reflexivity, antisymmetry and transitivity.
  static Poset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  /// Members ordered by inclusion.
  static Poset inclusion(const std::vector<Mask>& sets);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && up_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return up_[i][j] || up_[j][i]; }
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& down(std::size_t i) const { return down_[i]; }
  /// Same sets as masks; only valid when size() <= 64.
  Mask up_mask(std::size_t i) const { return up_mask_[i]; }
  Mask down_mask(std::size_t i) const { return down_mask_[i]; }

  /// True when j covers i.
  bool covers(std::size_t i, std::size_t j) const;
  std::vector<Cover> cover_pairs() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  Poset dual() const;
  /// Subposet on the listed elements, renumbered in list order.
  Poset induced(const std::vector<std::size_t>& elements) const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  explicit Poset(std::vector<Bits> up);

  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Mask> up_mask_;
  std::vector<Mask> down_mask_;
};

/// Pairs (i, j) ordered componentwise; element (i, j) has index i*|Q| + j.
Poset product(const Poset& p, const Poset& q);
/// P's elements first, then Q's shifted by |P|.
Poset disjoint_union(const Poset& p, const Poset& q);

struct Antichain {
  std::size_t width = 0;
  std::vector<std::size_t> elements;
};

/// Maximum antichain via maximum matching on the strict-order split graph.
Antichain width(const Poset& p);
/// Exhaustive search; refuses above 20 elements.
std::size_t width_brute(const Poset& p);

/// Minimum chain partition; each chain listed bottom to top.
std::vector<std::vector<std::size_t>> chain_decomposition(const Poset& p);

/// Kahn order, always taking the smallest available index.
std::vector<std::size_t> linear_extension(const Poset& p);

/// Number of covering steps in a longest chain (0 for an antichain).
std::size_t height(const Poset& p);

bool is_antichain(const Poset& p, const std::vector<std::size_t>& elements);
bool is_chain(const Poset& p, const std::vector<std::size_t>& elements);

// Mask-based helpers; they require size() <= 64.
Mask up_closure(const Poset& p, Mask s);
Mask down_closure(const Poset& p, Mask s);
Mask minimal_of(const Poset& p, Mask s);
Mask maximal_of(const Poset& p, Mask s);
bool is_antichain_mask(const Poset& p, Mask s);

/// Filters in the enumeration order of order maps into the 2-chain.
std::vector<Mask> filters(const Poset& p);
std::vector<Mask> ideals(const Poset& p);

/// values[x] is the image of element x.
using OrderMap = std::vector<std::uint32_t>;

/// Backtracking over linear_extension(p) with targets tried in ascending
/// index.  The visitor returns false to stop early.
void for_each_order_map(const Poset& p, const Poset& q, const std::function<bool(const OrderMap&)>& visit);

/// Refuses (rather than truncating) when more than `limit` maps exist.
std::vector<OrderMap> order_maps(const Poset& p, const Poset& q, std::size_t limit = 5'000'000);
std::uint64_t count_order_maps(const Poset& p, const Poset& q);
bool is_order_preserving(const Poset& p, const Poset& q, const OrderMap& f);

}  // namespace orderkit
