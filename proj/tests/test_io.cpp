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

#include <doctest.h>

#include "orderkit/orderkit.hpp"

using namespace orderkit;

TEST_CASE("family text format") {
  auto f = parse_family("family 2\nset\nset 0\nset 0 1\n");
  CHECK(f.size() == 3);
  CHECK(f.contains(0));
  CHECK(f.contains(3));
  CHECK(parse_family(serialize_family(f)) == f);
  auto g = parse_family("# comment\nfamily 3\n\nset 2\n");
  CHECK(g.members() == std::vector<Mask>{4});
}

TEST_CASE("duplicate sets are dropped with a warning") {
  std::vector<std::string> warnings;
  auto f = parse_family("family 2\nset 0\nset 0\n", &warnings);
  CHECK(f.size() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("malformed families are rejected") {
  CHECK_THROWS_AS(parse_family(""), InputError);
  CHECK_THROWS_AS(parse_family("family 2\nset 2\n"), InputError);
  CHECK_THROWS_AS(parse_family("family 2\nset 1 0\n"), InputError);
  CHECK_THROWS_AS(parse_family("family 2\nmember 0\n"), InputError);
  CHECK_THROWS_AS(parse_family("family x\n"), InputError);
  CHECK_THROWS_AS(parse_family("family 65\n"), InputError);
}

TEST_CASE("poset text format") {
  Poset p = parse_poset("poset 3\ncover 0 1\ncover 1 2\n");
  CHECK(p == Poset::chain(3));
  CHECK(parse_poset(serialize_poset(p)) == p);
  CHECK_THROWS_AS(parse_poset("poset 3\ncover 0 1\ncover 1 2\ncover 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_poset("poset 2\ncover 0 3\n"), InputError);
}

TEST_CASE("formatting helpers") {
  CHECK(to_fraction(Rational(2)) == "2/1");
  CHECK(to_fraction(Rational(6, 4)) == "3/2");
  CHECK(set_to_string(0) == "{}");
  CHECK(set_to_string(5) == "{0,2}");
}

TEST_CASE("checked arithmetic") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(checked_mul(~std::uint64_t{0}, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(~std::uint64_t{0}, 1), OverflowError);
  CHECK(checked_pow(3, 4) == 81);
}
