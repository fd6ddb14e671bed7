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

#include <vector>

#include "gtrel/entry.hpp"
#include "gtrel/vertex.hpp"

namespace gtrel {

// Triangular array of entries. Entries are stored flat, top row first, in
// the same order the serialized form lists them.
class Tableau {
  public:
    Tableau(int n, std::vector<Entry> entries);

    int n() const { return n_; }
    const Entry& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(
            vertex_index(n_, {row, col}))];
    }
    const Entry& at(Vertex v) const { return at(v.row, v.col); }
    const std::vector<Entry>& entries() const { return entries_; }

    bool operator==(const Tableau& rhs) const {
        return n_ == rhs.n_ && entries_ == rhs.entries_;
    }
    bool operator!=(const Tableau& rhs) const { return !(*this == rhs); }
    bool operator<(const Tableau& rhs) const {
        if (n_ != rhs.n_) return n_ < rhs.n_;
        return entries_ < rhs.entries_;
    }

    std::string to_string() const;

  private:
    int n_;
    std::vector<Entry> entries_;
};

// Integer shift with the top row pinned to zero. Rows below the top may be
// shifted freely; any attempt to touch row n throws TopRowImmutable.
class ShiftVector {
  public:
    explicit ShiftVector(int n);
    ShiftVector(int n, std::vector<int> z);  // validates the top row

    int n() const { return n_; }
    int at(int row, int col) const {
        return z_[static_cast<std::size_t>(vertex_index(n_, {row, col}))];
    }
    int at(Vertex v) const { return at(v.row, v.col); }
    void set(int row, int col, int value);
    const std::vector<int>& values() const { return z_; }

    bool is_zero() const;
    ShiftVector operator-() const;
    ShiftVector operator+(const ShiftVector& rhs) const;
    ShiftVector operator-(const ShiftVector& rhs) const;
    bool operator==(const ShiftVector& rhs) const {
        return n_ == rhs.n_ && z_ == rhs.z_;
    }
    bool operator!=(const ShiftVector& rhs) const { return !(*this == rhs); }
    bool operator<(const ShiftVector& rhs) const {
        if (n_ != rhs.n_) return n_ < rhs.n_;
        return z_ < rhs.z_;
    }

    std::string to_string() const;

  private:
    int n_;
    std::vector<int> z_;
};

// The unit shift adding `sign` (+1 or -1) at position (k, i), 1 <= i <= k
// <= n-1. Throws TopRowImmutable when k = n.
ShiftVector delta(int n, int k, int i, int sign);

// Adds z to the offsets of t entrywise; the top row is untouched by
// construction of ShiftVector.
Tableau shift(const Tableau& t, const ShiftVector& z);

// Per-row sorted entry multisets, top row first. Distinct tableaux inside
// one module window get distinct keys, so the key works as a weight label.
using CharacterKey = std::vector<std::vector<Entry>>;
CharacterKey character_key(const Tableau& t);

}  // namespace gtrel
