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

#include <cstdint>
#include <vector>

#include "gtrel/tableau.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

// Precomputed integer view of one shift orbit of a seed tableau under a
// graph. Within an orbit, which entry pairs share a symbol class never
// changes, so graph satisfaction, realization, and the reduced down-edge
// signature all reduce to integer threshold tests on the shift vector.
// This is what makes window sweeps cheap.
class OrbitContext {
  public:
    OrbitContext(const TriGraph& g, const Tableau& seed);

    int n() const { return n_; }
    const TriGraph& graph() const { return graph_; }
    const Tableau& seed() const { return seed_; }

    // Equivalent to is_realization(shift(seed, z), g); z is the flat layout
    // of a ShiftVector (top row zero).
    bool realization_at(const std::vector<int>& z) const;

    // Candidate down edges of the reduced graph: every consecutive-row
    // same-class pair not already forced by the closure of g. Bit i of a
    // mask refers to candidates()[i].
    const std::vector<Arrow>& candidates() const { return candidates_; }

    // Bitmask of candidates present in the reduced graph of shift(seed, z).
    // Equals the reduced down-edge signature; defined for realizations.
    std::uint64_t signature_mask(const std::vector<int>& z) const;

    std::vector<Arrow> mask_to_edges(std::uint64_t mask) const;

    // True when the orbit admits realizations at all: every same-row
    // same-class pair below the top row lies in one undirected component
    // of g (a z-independent condition).
    bool components_ok() const { return components_ok_; }

  private:
    int n_;
    TriGraph graph_;
    Tableau seed_;
    bool components_ok_;
    struct Constraint {
        int src, dst;  // flat vertex indices
        long long base;
        int min;  // base + z[src] - z[dst] >= min
    };
    std::vector<Constraint> arrow_constraints_;
    struct Candidate {
        int src, dst;
        long long base;  // edge present iff base + z[src] - z[dst] >= 0
    };
    std::vector<Candidate> candidate_tests_;
    std::vector<Arrow> candidates_;
};

}  // namespace gtrel
