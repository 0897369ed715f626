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

#include <string>
#include <vector>

#include "orderkit/family.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Text formats:
///   poset <n>            family <n>
///   cover <i> <j>        set <e1> <e2> ...   (bare `set` is ∅)
/// Blank lines and lines starting with '#' are ignored.
/// Errors are InputError with a "line N:" prefix.
Poset parse_poset(const std::string& text);
/// Duplicate sets are dropped and reported through `warnings` when given.
SetFamily parse_family(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Canonical text: covers and sets in sorted order.
std::string serialize_poset(const Poset& p);
std::string serialize_family(const SetFamily& f);

std::string read_file(const std::string& path);

}  // namespace orderkit
