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

#include <optional>
#include <string>

#include "gtrel/poly.hpp"
#include "gtrel/rational.hpp"

namespace gtrel {

// A tableau entry: a class symbol plus a rational offset, e.g. "pi+2" or
// "3/2". The empty symbol marks the pure-rational class. Two entries differ
// by an integer only when they carry the same symbol.
struct Entry {
    std::string sym;  // "" = pure rational
    Rational off;

    bool operator==(const Entry& rhs) const {
        return sym == rhs.sym && off == rhs.off;
    }
    bool operator<(const Entry& rhs) const {
        if (sym != rhs.sym) return sym < rhs.sym;
        return off < rhs.off;
    }
};

// a - b when both entries share a class and the offset difference is an
// integer; absent otherwise.
std::optional<Int> integer_difference(const Entry& a, const Entry& b);

// Accepts "p/q", "sym", "sym+p/q", "sym-p/q" (no spaces). Throws ParseError.
Entry parse_entry(const std::string& text);
std::string format_entry(const Entry& e);

// The entry as a polynomial: its symbol as an indeterminate plus the offset.
Poly entry_poly(const Entry& e);

}  // namespace gtrel
