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

#include "gtrel/entry.hpp"

#include <cctype>

#include "gtrel/errors.hpp"
#include "gtrel/symbols.hpp"

namespace gtrel {

std::optional<Int> integer_difference(const Entry& a, const Entry& b) {
    if (a.sym != b.sym) return std::nullopt;
    const Rational d = a.off - b.off;
    if (!is_integer(d)) return std::nullopt;
    return to_integer(d);
}

Entry parse_entry(const std::string& text) {
    if (text.empty()) throw ParseError("empty tableau entry");
    Entry e;
    std::size_t pos = 0;
    const auto is_ident_start = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    const auto is_ident_char = [&](char c) {
        return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    };
    if (is_ident_start(text[0])) {
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        e.sym = text.substr(0, pos);
        if (pos == text.size()) return e;
        const char op = text[pos];
        if (op != '+' && op != '-')
            throw ParseError("bad tableau entry '" + text + "'");
        e.off = parse_rational(text.substr(pos + 1));
        if (op == '-') e.off = -e.off;
        return e;
    }
    e.off = parse_rational(text);
    return e;
}

std::string format_entry(const Entry& e) {
    if (e.sym.empty()) return format_rational(e.off);
    if (e.off == 0) return e.sym;
    if (e.off > 0) return e.sym + "+" + format_rational(e.off);
    return e.sym + "-" + format_rational(-e.off);
}

Poly entry_poly(const Entry& e) {
    Poly p{e.off};
    if (!e.sym.empty()) p += Poly::variable(symbol_id(e.sym));
    return p;
}

}  // namespace gtrel
