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

#include "orderkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace orderkit {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(line, "expected a non-negative integer, got '" + token + "'");
  }
  if (token.size() > 9) fail(line, "integer too large: " + token);
  return std::stoll(token);
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword, std::size_t limit) {
  if (lines.empty()) throw InputError("line 1: missing '" + keyword + " <n>' header");
  const Line& h = lines.front();
  if (h.tokens[0] != keyword || h.tokens.size() != 2) fail(h.number, "expected '" + keyword + " <n>'");
  long long n = parse_int(h.tokens[1], h.number);
  if (static_cast<std::size_t>(n) > limit) fail(h.number, keyword + " size exceeds " + std::to_string(limit));
  return static_cast<std::size_t>(n);
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "poset", 4096);
  std::vector<Poset::Cover> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "cover" || l.tokens.size() != 3) fail(l.number, "expected 'cover <i> <j>'");
    auto a = static_cast<std::size_t>(parse_int(l.tokens[1], l.number));
    auto b = static_cast<std::size_t>(parse_int(l.tokens[2], l.number));
    if (a >= n || b >= n) fail(l.number, "element out of range");
    covers.emplace_back(a, b);
  }
  try {
    return Poset::from_covers(n, covers);
  } catch (const InputError& e) {
    throw InputError(std::string("poset: ") + e.what());
  }
}

SetFamily parse_family(const std::string& text, std::vector<std::string>* warnings) {
  std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "family", 64);
  std::vector<Mask> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "set") fail(l.number, "expected 'set <e1> <e2> ...'");
    Mask u = 0;
    long long prev = -1;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      long long e = parse_int(l.tokens[t], l.number);
      if (static_cast<std::size_t>(e) >= n) fail(l.number, "element " + l.tokens[t] + " out of range");
      if (e <= prev) fail(l.number, "elements must be strictly ascending");
      prev = e;
      u |= bit(static_cast<int>(e));
    }
    if (std::find(members.begin(), members.end(), u) != members.end()) {
      if (warnings) warnings->push_back("line " + std::to_string(l.number) + ": duplicate set " + set_to_string(u) + " dropped");
      continue;
    }
    members.push_back(u);
  }
  return SetFamily(static_cast<int>(n), std::move(members));
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << '\n';
  for (auto [lo, hi] : p.cover_pairs()) out << "cover " << lo << ' ' << hi << '\n';
  return out.str();
}

std::string serialize_family(const SetFamily& f) {
  std::ostringstream out;
  out << "family " << f.ground() << '\n';
  for (Mask u : f) {
    out << "set";
    for (int e : elements_of(u)) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace orderkit
