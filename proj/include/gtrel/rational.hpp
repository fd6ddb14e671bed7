// Copyright 2026 The gtrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gtrel {

// Arbitrary-precision integers and rationals. cpp_rational keeps the value
// reduced with a positive denominator, which is exactly the canonical form
// required everywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

// Exact integer value. Pre: is_integer(q).
inline Int to_integer(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

// Parses "p/q", "p", "-p/q". Throws ParseError on anything else
// (zero denominators included).
Rational parse_rational(std::string_view text);

// "p/q" with q > 1, otherwise just "p". No spaces.
std::string format_rational(const Rational& q);

}  // namespace gtrel
