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

#include "orderkit/common.hpp"

#include <sstream>

namespace orderkit {

std::string to_fraction(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return out.str();
}

std::string set_to_string(Mask m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int x : elements_of(m)) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace orderkit
