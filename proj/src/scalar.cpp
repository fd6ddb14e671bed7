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

#include "gtrel/scalar.hpp"

#include <algorithm>
#include <utility>

#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

Poly product(const std::vector<Poly>& factors) {
    Poly out{Rational(1)};
    for (const Poly& f : factors) out = out * f;
    return out;
}

// Multiset difference a \ b of sorted factor lists.
std::vector<Poly> factor_difference(const std::vector<Poly>& a,
                                    const std::vector<Poly>& b) {
    std::vector<Poly> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

// Multiset union (maximum multiplicities) of sorted factor lists.
std::vector<Poly> factor_union(const std::vector<Poly>& a,
                               const std::vector<Poly>& b) {
    std::vector<Poly> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

}  // namespace

void Scalar::push_factor(Poly f) {
    if (f.is_zero()) throw ZeroDivision("division by zero scalar");
    if (f.is_constant()) {
        num_.scale(Rational(1) / f.constant_value());
        return;
    }
    Rational content;
    Poly primitive;
    primitive_part(f, content, primitive);
    num_.scale(Rational(1) / content);
    den_.insert(std::upper_bound(den_.begin(), den_.end(), primitive),
                std::move(primitive));
}

void Scalar::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    if (num_.is_constant()) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            Poly quot;
            if (Poly::divide(num_, *it, quot)) {
                num_ = std::move(quot);
                den_.erase(it);
                changed = !num_.is_constant();
                break;
            }
        }
    }
}

Scalar Scalar::ratio(Poly num, std::vector<Poly> den) {
    Scalar out{std::move(num)};
    for (Poly& f : den) out.push_factor(std::move(f));
    out.cancel();
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    if (den_.empty() && rhs.den_.empty()) return Scalar{num_ + rhs.num_};
    const std::vector<Poly> common = factor_union(den_, rhs.den_);
    const Poly lhs_scaled = num_ * product(factor_difference(common, den_));
    const Poly rhs_scaled =
        rhs.num_ * product(factor_difference(common, rhs.den_));
    Scalar out{lhs_scaled + rhs_scaled};
    out.den_ = common;
    out.cancel();
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    if (is_zero() || rhs.is_zero()) return Scalar{};
    Scalar out{num_ * rhs.num_};
    // Denominator multiplicities add under multiplication, so the factor
    // lists are merged rather than united.
    std::vector<Poly> merged;
    merged.reserve(den_.size() + rhs.den_.size());
    std::merge(den_.begin(), den_.end(), rhs.den_.begin(), rhs.den_.end(),
               std::back_inserter(merged));
    out.den_ = std::move(merged);
    out.cancel();
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    if (rhs.is_zero()) throw ZeroDivision("division by zero scalar");
    if (is_zero()) return Scalar{};
    Poly new_num = num_ * product(rhs.den_);
    if (rhs.num_.is_constant()) {
        new_num.scale(Rational(1) / rhs.num_.constant_value());
        return ratio(std::move(new_num), den_);
    }
    Poly quot;
    if (Poly::divide(new_num, rhs.num_, quot)) {
        return ratio(std::move(quot), den_);
    }
    if (rhs.num_.degree() == 1) {
        std::vector<Poly> new_den = den_;
        new_den.push_back(rhs.num_);
        return ratio(std::move(new_num), std::move(new_den));
    }
    throw NonLinearDivisor(
        "cannot divide by a scalar whose numerator is nonlinear: " +
        rhs.num_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& rhs) { return *this = *this + rhs; }
Scalar& Scalar::operator-=(const Scalar& rhs) { return *this = *this - rhs; }
Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

bool Scalar::operator==(const Scalar& rhs) const {
    // Cross-multiply after discarding the shared denominator factors; the
    // polynomial ring has no zero divisors, so this is sound.
    const Poly lhs_side = num_ * product(factor_difference(rhs.den_, den_));
    const Poly rhs_side =
        rhs.num_ * product(factor_difference(den_, rhs.den_));
    return lhs_side == rhs_side;
}

Rational Scalar::evaluate(const std::vector<Rational>& point) const {
    Rational value = num_.evaluate(point);
    for (const Poly& f : den_) {
        const Rational d = f.evaluate(point);
        if (d == 0) throw Error("scalar evaluated at a denominator root");
        value /= d;
    }
    return value;
}

std::string Scalar::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string out = "(" + num_.to_string() + ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i > 0) out += "*";
        out += "(" + den_[i].to_string() + ")";
    }
    out += ")";
    return out;
}

}  // namespace gtrel
