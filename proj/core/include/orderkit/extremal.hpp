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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orderkit/common.hpp"
#include "orderkit/family.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

// Extremal constructors.  Ground sets are 0-based: [n] is {0..n-1}, Z_n the
// same set read cyclically.

/// Initial segments with one later point adjoined: {0..i-1} ∪ {j}, j ≥ i.
SetFamily prefix_point_family(int n);
/// Singletons plus the segments containing 0 or n-1.
SetFamily end_segments_family(int n);
/// Singletons plus {0..i} ∪ {j} for i < j ≤ min(i+k, n-1).
SetFamily prefix_window_family(int k, int n);
/// Arcs with at most k elements, arcs starting at 0..k-1, ∅ and Z_n.
SetFamily short_arcs_family(int k, int n);
/// Segments with at most k elements and segments starting at 0..k-1.
SetFamily short_segments_family(int k, int n);
/// The layered construction over Z (short segments, anchored rays and the
/// bridging blocks) restricted to [n]; locally k-wide for k ≥ 2.
SetFamily layered_segments_family(int k, int n);
/// Locally 4-wide family with period six: segments of length ≤ 4, rays
/// from the first four points, pairs {i, i+2} and two triples per period.
SetFamily sixfold_family(int n);
/// w layered antichains of sizes w, w-1, ..., 1, each layer below the next.
Poset layered_antichains_poset(int w);

/// Maximum size of a locally k-wide family of segments of [n], by recursion.
std::uint64_t segments_max(int k, int n);

enum class BoundClass { kUniform, kGeneral, kGeneralLog, kCentered, kCenteredSegments, kPseudotree, kSegments, kArcs };

BoundClass parse_bound_class(const std::string& name);
std::string bound_class_name(BoundClass c);

/// Rational enclosure lo < ln(x) < hi with hi - lo ≤ 2^-bits.
std::pair<Rational, Rational> ln_enclosure(std::uint64_t x, int bits = 64);

struct BoundReport {
  BoundClass cls{};
  int k = 0;
  int n = 0;
  int r = 0;
  std::string formula;
  /// Exact value before rounding down (unset for the logarithmic class).
  Rational value;
  /// Exact integer bound for every class except the logarithmic one.
  std::uint64_t bound = 0;
  bool integral = true;
  /// Logarithmic class only: enclosures of 2 + n + kn ln(n) and of the
  /// sharper 2 + n + kn ln(n-1); `bound` holds the floor of the first.
  Rational log_lo, log_hi, log_proof_lo, log_proof_hi;
  std::uint64_t proof_bound = 0;
  std::optional<std::uint64_t> attained;
};

/// Throws InputError when the class's preconditions fail.
BoundReport bound(BoundClass cls, int k, int n, int r = 0);

struct OverlapReduction {
  /// Ū per member of F, aligned with F.members().
  std::vector<Mask> overline;
  SetFamily reduced;      // F_r = {U ∖ Ū}
  SetFamily overlaps;     // F̄ = {Ū}
  /// σ over F_r followed by σ over F̄ ∖ {∅}; each entry is a member of F.
  std::vector<Mask> sigma_reduced;
  std::vector<Mask> sigma_overlaps;
  bool surjective = false;
};

/// Left overlap of V with U (arcs of Z_n): the prefix of U ending at V's
/// last element, when the two are incomparable and that element lies in U;
/// 0 otherwise.
Mask left_overlap(int n, Mask v, Mask u);

/// Reduction of an arc family of Z_n into a locally 1-wide family and the
/// family of maximal left overlaps.  Throws InputError when a member is not
/// an arc.
OverlapReduction left_overlap_reduction(const SetFamily& f);

enum class SearchClass { kAll, kCentered, kPseudotree, kArcs, kSegments };
SearchClass parse_search_class(const std::string& name);
std::string search_class_name(SearchClass c);

struct SearchResult {
  std::size_t max_size = 0;
  SetFamily witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum over families of the class on ground n.  k bounds the
/// local width; without k only the class predicate applies.  Refuses when
/// the search space or node budget is exceeded.
SearchResult max_search(SearchClass cls, std::optional<int> k, int n, std::uint64_t node_budget = 200'000'000);

}  // namespace orderkit
