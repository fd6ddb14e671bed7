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

#include "gtrel/poly.hpp"

#include <algorithm>

#include "gtrel/errors.hpp"
#include "gtrel/symbols.hpp"

namespace gtrel {

namespace {

void trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    std::size_t k = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

bool mono_div(const Mono& a, const Mono& b, Mono& out) {
    if (b.size() > a.size()) {
        for (std::size_t i = a.size(); i < b.size(); ++i)
            if (b[i] != 0) return false;
    }
    out.assign(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size() && i < a.size(); ++i) {
        if (b[i] > a[i]) return false;
        out[i] = a[i] - b[i];
    }
    trim(out);
    return true;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Mono{}, c);
}

Poly Poly::constant(const Rational& c) { return Poly(c); }

Poly Poly::variable(int symbol) {
    Poly p;
    Mono m(static_cast<std::size_t>(symbol) + 1, 0);
    m.back() = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

unsigned Poly::degree() const {
    if (terms_.empty()) return 0;
    return mono_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out(*this);
    out += rhs;
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly out(*this);
    out -= rhs;
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

void Poly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, coef] : terms_) coef *= c;
}

bool Poly::operator<(const Poly& rhs) const {
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    MonoLess less;
    for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return true;
        if (less(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != rhs.terms_.end();
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size()) throw Error("evaluation point missing an indeterminate");
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        }
        total += v;
    }
    return total;
}

bool Poly::divide(const Poly& a, const Poly& b, Poly& quot) {
    if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
    quot = Poly();
    if (a.is_zero()) return true;
    if (b.is_constant()) {
        quot = a;
        quot.scale(Rational(1) / b.constant_value());
        return true;
    }
    Poly r(a);
    const auto& lb = *b.terms_.rbegin();
    Mono q;
    while (!r.is_zero()) {
        const auto& lr = *r.terms_.rbegin();
        if (!mono_div(lr.first, lb.first, q)) return false;
        Rational c = lr.second / lb.second;
        Poly step;
        step.terms_.emplace(q, c);
        quot += step;
        r -= step * b;
    }
    return true;
}

void primitive_part(const Poly& f, Rational& c, Poly& g) {
    if (f.is_zero()) throw Error("primitive_part of zero polynomial");
    // Content: gcd of numerators over lcm of denominators, signed so the
    // leading coefficient of the primitive part is positive.
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, coef] : f.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(coef));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(coef));
    }
    Rational content(num_gcd, den_lcm);
    if (f.terms().rbegin()->second < 0) content = -content;
    c = content;
    g = f;
    g.scale(Rational(1) / content);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += symbol_name(static_cast<int>(i));
            if (it->first[i] > 1) {
                vars += '^';
                vars += std::to_string(it->first[i]);
            }
        }
        if (vars.empty()) {
            out += format_rational(mag);
        } else {
            if (mag != 1) {
                out += format_rational(mag);
                out += '*';
            }
            out += vars;
        }
    }
    return out;
}

}  // namespace gtrel
