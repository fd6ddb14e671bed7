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

#include "gtrel/rational.hpp"

#include <cctype>

#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

bool parse_int(std::string_view text, Int& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) return false;
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        value = value * 10 + (text[pos] - '0');
    }
    out = negative ? -value : value;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Int num, den = 1;
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_int(text, num);
    } else {
        ok = parse_int(text.substr(0, slash), num) &&
             parse_int(text.substr(slash + 1), den);
        if (ok && den == 0) throw ParseError("rational with zero denominator: \"" + std::string(text) + "\"");
    }
    if (!ok) throw ParseError("not a rational: \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1) {
        s += '/';
        s += boost::multiprecision::denominator(q).str();
    }
    return s;
}

}  // namespace gtrel
