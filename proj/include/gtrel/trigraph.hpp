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

#include "gtrel/vertex.hpp"

namespace gtrel {

// Directed graph on the triangular vertex set. Arrows are kept sorted and
// unique; self-loops are rejected at insertion.
class TriGraph {
  public:
    explicit TriGraph(int n);
    TriGraph(int n, const std::vector<Arrow>& arrows);

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    bool has_arrow(Vertex from, Vertex to) const;
    // Inserts unless already present; throws Error on self-loops or
    // endpoints outside the triangle.
    void add_arrow(Vertex from, Vertex to);

    std::vector<Vertex> out_neighbors(Vertex v) const;
    std::vector<Vertex> in_neighbors(Vertex v) const;

    bool operator==(const TriGraph& rhs) const {
        return n_ == rhs.n_ && arrows_ == rhs.arrows_;
    }
    bool operator!=(const TriGraph& rhs) const { return !(*this == rhs); }

  private:
    int n_;
    std::vector<Arrow> arrows_;  // sorted by (from, to)
};

// True iff a directed path of length >= 1 leads from a to b.
bool reachable(const TriGraph& g, Vertex a, Vertex b);

// ((k,i),(k,j)) with i < j <= k <= n-1 such that a path joins (k,i) to
// (k,j) and no path joins (k,i) to (k,t) or (k,t) to (k,j) for i < t < j.
std::vector<std::pair<Vertex, Vertex>> adjoining_pairs(const TriGraph& g);

struct Violation {
    std::string condition;  // "I" .. "VI"
    std::vector<Vertex> witnesses;
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
};

// Checks the six structural conditions a graph must meet before it can
// induce a module: (I) arrows stay between consecutive rows or inside the
// top row; (II) no path runs right-to-left within a row; (III) no oriented
// cycles; (IV) same-row vertices of one undirected component (rows below
// the top) are joined by an oriented path; (V) no crossing pair of down
// arrows; (VI) every adjoining pair is completed by a through-neighbor
// pattern (both an upper and a lower relay) or by a strictly ordered pair
// of top contacts. All violations are reported, not just the first.
ValidationReport validate_relation_graph(const TriGraph& g);

// True iff the graph has no adjoining pairs.
bool is_generic(const TriGraph& g);

}  // namespace gtrel
