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

#include "gtrel/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtrel/errors.hpp"

namespace gtrel {

Tableau::Tableau(int n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 2) throw Error("tableau needs n >= 2");
    if (entries_.size() != static_cast<std::size_t>(triangle_size(n_)))
        throw Error("tableau entry count does not match n");
}

std::string Tableau::to_string() const {
    std::string out;
    for (int row = n_; row >= 1; --row) {
        if (row != n_) out += "|";
        for (int col = 1; col <= row; ++col) {
            if (col > 1) out += ",";
            out += format_entry(at(row, col));
        }
    }
    return out;
}

ShiftVector::ShiftVector(int n)
    : n_(n), z_(static_cast<std::size_t>(triangle_size(n)), 0) {
    if (n_ < 2) throw Error("shift vector needs n >= 2");
}

ShiftVector::ShiftVector(int n, std::vector<int> z)
    : n_(n), z_(std::move(z)) {
    if (n_ < 2) throw Error("shift vector needs n >= 2");
    if (z_.size() != static_cast<std::size_t>(triangle_size(n_)))
        throw Error("shift vector length does not match n");
    for (int col = 1; col <= n_; ++col)
        if (at(n_, col) != 0)
            throw TopRowImmutable("shift vector is nonzero on the top row");
}

void ShiftVector::set(int row, int col, int value) {
    if (row == n_)
        throw TopRowImmutable("cannot shift a top-row position");
    if (!in_triangle(n_, {row, col}))
        throw Error("shift position outside the triangle");
    z_[static_cast<std::size_t>(vertex_index(n_, {row, col}))] = value;
}

bool ShiftVector::is_zero() const {
    return std::all_of(z_.begin(), z_.end(), [](int v) { return v == 0; });
}

ShiftVector ShiftVector::operator-() const {
    ShiftVector out = *this;
    for (int& v : out.z_) v = -v;
    return out;
}

ShiftVector ShiftVector::operator+(const ShiftVector& rhs) const {
    if (n_ != rhs.n_) throw Error("shift vectors of different sizes");
    ShiftVector out = *this;
    for (std::size_t i = 0; i < z_.size(); ++i) out.z_[i] += rhs.z_[i];
    return out;
}

ShiftVector ShiftVector::operator-(const ShiftVector& rhs) const {
    return *this + (-rhs);
}

std::string ShiftVector::to_string() const {
    std::string out;
    for (int row = n_; row >= 1; --row) {
        if (row != n_) out += "|";
        for (int col = 1; col <= row; ++col) {
            if (col > 1) out += ",";
            out += std::to_string(at(row, col));
        }
    }
    return out;
}

ShiftVector delta(int n, int k, int i, int sign) {
    if (sign != 1 && sign != -1) throw Error("delta sign must be +1 or -1");
    ShiftVector z{n};
    z.set(k, i, sign);  // throws TopRowImmutable when k = n
    return z;
}

Tableau shift(const Tableau& t, const ShiftVector& z) {
    if (t.n() != z.n()) throw Error("shift vector size does not match tableau");
    std::vector<Entry> entries = t.entries();
    const std::vector<int>& values = z.values();
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].off += values[i];
    return Tableau{t.n(), std::move(entries)};
}

CharacterKey character_key(const Tableau& t) {
    CharacterKey key;
    key.reserve(static_cast<std::size_t>(t.n()));
    for (int row = t.n(); row >= 1; --row) {
        std::vector<Entry> bucket;
        bucket.reserve(static_cast<std::size_t>(row));
        for (int col = 1; col <= row; ++col) bucket.push_back(t.at(row, col));
        std::sort(bucket.begin(), bucket.end());
        key.push_back(std::move(bucket));
    }
    return key;
}

}  // namespace gtrel
