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
#include <vector>

namespace orderkit {

/// Maximum bipartite matching (Hopcroft-Karp).  Left vertices 0..left-1,
/// right vertices 0..right-1.
class BipartiteMatcher {
 public:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t l, std::size_t r);

  /// Runs the augmentation phases; returns the matching size.
  std::size_t solve();

  std::size_t size() const { return size_; }
  std::size_t mate_of_left(std::size_t l) const { return match_left_[l]; }
  std::size_t mate_of_right(std::size_t r) const { return match_right_[r]; }
  bool saturates_left() const { return size_ == left_; }

  /// Left vertices reachable from free left vertices by alternating paths.
  /// When the left side is not saturated this set S has |N(S)| < |S|.
  std::vector<std::size_t> hall_violator() const;

  /// Minimum vertex cover (Koenig) as (left part, right part).
  std::pair<std::vector<bool>, std::vector<bool>> vertex_cover() const;

 private:
  bool bfs();
  bool dfs(std::size_t l);
  std::vector<bool> alternating_reach_left(std::vector<bool>* right_seen) const;

  std::size_t left_, right_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
  std::size_t size_ = 0;
};

}  // namespace orderkit
