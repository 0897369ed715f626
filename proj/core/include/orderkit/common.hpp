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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orderkit {

/// Subset of a ground set of at most 64 elements.
using Mask = std::uint64_t;

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Malformed input or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation declined because it would exceed its budget.  Never
/// replaced by a partial answer.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is always divisible by i at this point.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

/// Always "num/den", including integers ("2/1"), so reports parse uniformly.
std::string to_fraction(const Rational& q);

/// "{}" / "{0,2,5}".
std::string set_to_string(Mask m);

}  // namespace orderkit
