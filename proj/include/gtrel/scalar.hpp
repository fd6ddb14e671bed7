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

#include <string>
#include <vector>

#include "gtrel/poly.hpp"

namespace gtrel {

// Element of the rational-function field whose denominator is a product of
// linear forms. The numerator is an expanded polynomial; the denominator is a
// sorted multiset of factors, each of total degree 1, integer-primitive, with
// positive leading coefficient (rational content is folded into the
// numerator). Every denominator produced by the generator formulas is a
// difference of two tableau entries, hence linear, so this shape is closed
// under all the arithmetic the library performs.
//
// The representation is not reduced to lowest terms in general (the numerator
// may still share a factor with the denominator after the cheap trial
// divisions), so equality is decided by cross-multiplication.
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(const Rational& c) : num_(c) {}
    explicit Scalar(Poly num) : num_(std::move(num)) {}

    // num / (f1 * f2 * ...). Factors may be any nonzero polynomials of
    // degree <= 1; constants are folded into the numerator, linear factors
    // are normalized, and exactly divisible factors are cancelled.
    static Scalar ratio(Poly num, std::vector<Poly> den);

    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const std::vector<Poly>& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    // Throws ZeroDivision on a zero divisor and NonLinearDivisor when the
    // divisor's numerator has degree > 1 and does not divide exactly.
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Substitutes rationals for the indeterminates; throws Error when the
    // point is a root of the denominator.
    Rational evaluate(const std::vector<Rational>& point) const;

    // "num" or "(num)/((f1)*(f2))".
    std::string to_string() const;

  private:
    Poly num_;
    std::vector<Poly> den_;

    void cancel();
    void push_factor(Poly f);
};

}  // namespace gtrel
