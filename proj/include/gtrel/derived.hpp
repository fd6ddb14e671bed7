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

#include "gtrel/tableau.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

// True iff the entry difference along every arrow is an integer of the
// right sign: >= 0 on down and rightward (top-row) arrows, > 0 on up arrows.
bool satisfies(const Tableau& t, const TriGraph& g);

// satisfies(t, g) plus: below the top row, an integer difference between
// two entries of one row is allowed only when the two positions lie in the
// same undirected component of g.
bool is_realization(const Tableau& t, const TriGraph& g);

// The graph of all integral difference relations present in t: an arrow
// (i,j)->(r,s) when i = r+1 and the difference is a nonnegative integer,
// when i = r-1 and it is a positive integer, or when both sit in the top
// row and the difference is a nonnegative integer. Equal top-row entries
// would relate both ways; only the left-to-right arrow is kept so the
// result stays acyclic.
TriGraph build_G_of_L(const Tableau& t);

// The path closure of g restricted to readable arrows: (i,j)->(r,s) when a
// directed path joins them in g and the rows are adjacent, or both are
// top-row vertices. The top-row clause is path-conditioned as well; an
// unconditional reading would relate every top-row pair and is rejected
// (it disagrees with the closure's role as the part of G(L) common to the
// whole module).
TriGraph build_Gbar(const TriGraph& g);

// Arrows of a not in b (same n).
TriGraph graph_difference(const TriGraph& a, const TriGraph& b);

// The arrows of g pointing down (source row = target row + 1), sorted.
std::vector<Arrow> down_edges(const TriGraph& g);

// Vertices incident to at least one arrow of g, sorted.
std::vector<Vertex> incident_vertices(const TriGraph& g);

using Chain = std::vector<Vertex>;  // path order, source first

// All maximal chains of g with respect to z: oriented paths through
// vertices with nonzero shift, extendable at neither end through another
// nonzero-shift vertex. A single vertex counts as a path only when it is
// incident to some arrow of g. Throws ZeroShift on z = 0. Result sorted.
std::vector<Chain> maximal_chains(const TriGraph& g, const ShiftVector& z);

}  // namespace gtrel
