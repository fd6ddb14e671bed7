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

#include <map>
#include <string>
#include <vector>

#include "gtrel/rational.hpp"

namespace gtrel {

// Exponent vector over the registered indeterminates; index i is the exponent
// of the symbol with id i. Trailing zeros are trimmed, so the constant
// monomial is the empty vector.
using Mono = std::vector<unsigned>;

// Graded lexicographic order: lower total degree first; among equal degrees,
// the monomial with the larger exponent on the earliest differing
// indeterminate is the larger one.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

unsigned mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
// Quotient exponent vector, or false when b does not divide a.
bool mono_div(const Mono& a, const Mono& b, Mono& out);

// Sparse multivariate polynomial with rational coefficients. Zero
// coefficients are never stored; the term map is kept in the fixed monomial
// order, making representations canonical and comparisons cheap.
class Poly {
  public:
    using TermMap = std::map<Mono, Rational, MonoLess>;

    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly constant(const Rational& c);
    static Poly variable(int symbol);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Pre: is_constant(). The zero polynomial yields 0.
    Rational constant_value() const;
    unsigned degree() const;
    const TermMap& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator*=(const Poly& rhs);
    void scale(const Rational& c);

    bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }
    // Total order used to keep factor lists sorted; compares term sequences.
    bool operator<(const Poly& rhs) const;

    // Substitutes point[i] for the symbol with id i. Indeterminates outside
    // the vector's range are an error.
    Rational evaluate(const std::vector<Rational>& point) const;

    // Exact division: returns true and sets quot when rhs divides this with
    // zero remainder. Leading-term reduction; the first leading term of the
    // running remainder that rhs's leading term fails to divide certifies
    // inexactness, because leading monomials are multiplicative.
    static bool divide(const Poly& a, const Poly& b, Poly& quot);

    // Canonical rendering, leading term first, symbols by name:
    // "2*pi^2*x - 3/2". The zero polynomial prints "0".
    std::string to_string() const;

    void add_term(const Mono& m, const Rational& c);

  private:
    TermMap terms_;
};

// Splits f = c * g with g integer-primitive (integer coefficients with gcd 1)
// and positive leading coefficient. Pre: f nonzero. Used to normalize
// denominator factors.
void primitive_part(const Poly& f, Rational& c, Poly& g);

}  // namespace gtrel
