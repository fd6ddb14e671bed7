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

#include <compare>
#include <utility>
#include <vector>

namespace gtrel {

// Position in the triangular index set {(row, col) : 1 <= col <= row <= n}.
// Row n is the top (fixed) row of a tableau, row 1 the single bottom entry.
struct Vertex {
    int row = 0;
    int col = 0;
    auto operator<=>(const Vertex&) const = default;
};

using Arrow = std::pair<Vertex, Vertex>;

inline int triangle_size(int n) { return n * (n + 1) / 2; }

// Flat index of v when rows are laid out top (row n) to bottom (row 1),
// matching the serialized row order.
inline int vertex_index(int n, Vertex v) {
    return triangle_size(n) - triangle_size(v.row) + (v.col - 1);
}

inline bool in_triangle(int n, Vertex v) {
    return 1 <= v.col && v.col <= v.row && v.row <= n;
}

// All vertices in flat layout order: (n,1)..(n,n), (n-1,1)..., down to (1,1).
inline std::vector<Vertex> all_vertices(int n) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(triangle_size(n)));
    for (int row = n; row >= 1; --row)
        for (int col = 1; col <= row; ++col) out.push_back({row, col});
    return out;
}

}  // namespace gtrel
