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

#include <utility>
#include <vector>

#include "gtrel/tableau.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

// Reduced down-edge signature of a realization: the down arrows its induced
// difference graph adds on top of the closure of g. Sorted; two tableaux
// generate the same cyclic submodule exactly when their signatures agree,
// and the signature is empty exactly for module generators.
using Signature = std::vector<Arrow>;

// Throws Error when t is not a g-realization.
Signature signature(const Tableau& t, const TriGraph& g);

// True iff s belongs to the basis of the cyclic submodule generated by r,
// i.e. the signature of r is a subset of the signature of s. Both tableaux
// must lie in one shift orbit (same top row, integer offsets elsewhere);
// otherwise DifferentModule.
bool in_submodule_basis(const Tableau& s, const Tableau& r,
                        const TriGraph& g);

// Signature equality / emptiness: r and q generate the same cyclic
// submodule; r generates the whole module.
bool same_cyclic(const Tableau& r, const Tableau& q, const TriGraph& g);
bool is_cyclic_generator(const Tableau& r, const TriGraph& g);

// Picks a vertex v with z(v) != 0 such that moving the whole z(v) run at v
// keeps the tableau a realization and leaves its signature sandwiched
// between those of r and shift(r, z). Candidates on maximal closure-chains
// are tried first, then every nonzero coordinate in row-major order.
// Throws NotMonotone when z = 0, either endpoint is not a realization, or
// the endpoint signatures are not nested.
Vertex find_step(const Tableau& r, const ShiftVector& z, const TriGraph& g);

// Splits z into unit steps (one coordinate run at a time, runs chosen by
// find_step) so that every prefix of the sequence is a realization and no
// signature edge is ever lost along the way. Throws NotMonotone as above.
std::vector<ShiftVector> decompose_translation(const Tableau& r,
                                               const ShiftVector& z,
                                               const TriGraph& g);

// True when a single generator maps r to a combination carrying q with a
// nonzero coefficient. Tableaux in different orbits never precede.
bool precedes_one(const Tableau& r, const Tableau& q, const TriGraph& g);

// All realizations shift(seed, z) with max-norm |z| <= radius, enumerated
// in lexicographic z order (top row fixed).
std::vector<Tableau> enumerate_window(const TriGraph& g, const Tableau& seed,
                                      int radius);

struct SignatureClass {
    Signature edges;
    long long count = 0;          // realizations in the window
    ShiftVector representative;   // lexicographically first achieving shift
};

struct ClassifyReport {
    int n = 0;
    int radius = 0;
    long long window_size = 0;              // realizations in the ball
    std::vector<SignatureClass> classes;    // sorted by (size, edge list)
    // (i, j) with classes[i].edges a strict subset of classes[j].edges and
    // no third class strictly between: the covering relations of the
    // signature lattice.
    std::vector<std::pair<int, int>> covers;
    // Classes whose signature no other achieved signature strictly
    // contains; each is a simple submodule candidate.
    std::vector<int> maximal_classes;
    int generator_class = -1;  // index of the empty signature, -1 if absent
};

// Sweeps the radius ball around the seed and groups realizations by
// signature. jobs > 1 splits the sweep across threads; the report is
// independent of the split. Throws Error when the seed is not a
// g-realization.
ClassifyReport classify_window(const TriGraph& g, const Tableau& seed,
                               int radius, int jobs = 1);

struct Window {
    int radius = 0;
    std::vector<Tableau> tableaux;
};

// All standard tableaux over the top row determined by a dominant integral
// weight (non-increasing integers); the count is the dimension of the
// corresponding simple module. Throws Error on a non-dominant weight.
Window build_finite_dimensional(const std::vector<Int>& lambda);

}  // namespace gtrel
