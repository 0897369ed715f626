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

#include "orderkit/bipartite.hpp"

#include <deque>
#include <limits>

namespace orderkit {

namespace {
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : left_(left),
      right_(right),
      adj_(left),
      match_left_(left, kFree),
      match_right_(right, kFree),
      dist_(left, kInf) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

bool BipartiteMatcher::bfs() {
  std::deque<std::size_t> queue;
  bool found = false;
  for (std::size_t l = 0; l < left_; ++l) {
    if (match_left_[l] == kFree) {
      dist_[l] = 0;
      queue.push_back(l);
    } else {
      dist_[l] = kInf;
    }
  }
  while (!queue.empty()) {
    std::size_t l = queue.front();
    queue.pop_front();
    for (std::size_t r : adj_[l]) {
      std::size_t next = match_right_[r];
      if (next == kFree) {
        found = true;
      } else if (dist_[next] == kInf) {
        dist_[next] = dist_[l] + 1;
        queue.push_back(next);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(std::size_t l) {
  for (std::size_t r : adj_[l]) {
    std::size_t next = match_right_[r];
    if (next == kFree || (dist_[next] == dist_[l] + 1 && dfs(next))) {
      match_left_[l] = r;
      match_right_[r] = l;
      return true;
    }
  }
  dist_[l] = kInf;
  return false;
}

std::size_t BipartiteMatcher::solve() {
  while (bfs()) {
    for (std::size_t l = 0; l < left_; ++l) {
      if (match_left_[l] == kFree && dfs(l)) ++size_;
    }
  }
  return size_;
}

std::vector<bool> BipartiteMatcher::alternating_reach_left(std::vector<bool>* right_seen) const {
  std::vector<bool> seen_left(left_, false);
  right_seen->assign(right_, false);
  std::deque<std::size_t> queue;
  for (std::size_t l = 0; l < left_; ++l) {
    if (match_left_[l] == kFree) {
      seen_left[l] = true;
      queue.push_back(l);
    }
  }
  while (!queue.empty()) {
    std::size_t l = queue.front();
    queue.pop_front();
    for (std::size_t r : adj_[l]) {
      if ((*right_seen)[r]) continue;
      (*right_seen)[r] = true;
      std::size_t next = match_right_[r];
      if (next != kFree && !seen_left[next]) {
        seen_left[next] = true;
        queue.push_back(next);
      }
    }
  }
  return seen_left;
}

std::vector<std::size_t> BipartiteMatcher::hall_violator() const {
  std::vector<bool> right_seen;
  std::vector<bool> reach = alternating_reach_left(&right_seen);
  std::vector<std::size_t> out;
  if (saturates_left()) return out;
  for (std::size_t l = 0; l < left_; ++l) {
    if (reach[l]) out.push_back(l);
  }
  return out;
}

std::pair<std::vector<bool>, std::vector<bool>> BipartiteMatcher::vertex_cover() const {
  std::vector<bool> right_seen;
  std::vector<bool> reach = alternating_reach_left(&right_seen);
  std::vector<bool> cover_left(left_);
  for (std::size_t l = 0; l < left_; ++l) cover_left[l] = !reach[l];
  return {cover_left, right_seen};
}

}  // namespace orderkit
