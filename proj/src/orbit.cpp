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

#include "gtrel/orbit.hpp"

#include <limits>
#include <numeric>

#include "gtrel/derived.hpp"
#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

long long to_ll(const Int& v) {
    if (v > (std::numeric_limits<long long>::max)() / 4 ||
        v < (std::numeric_limits<long long>::min)() / 4)
        throw Error("entry difference too large for the orbit fast path");
    return static_cast<long long>(v);
}

}  // namespace

OrbitContext::OrbitContext(const TriGraph& g, const Tableau& seed)
    : n_(seed.n()), graph_(g), seed_(seed), components_ok_(true) {
    if (g.n() != seed.n()) throw Error("graph size does not match tableau");

    // Arrow constraints: along every arrow the class must match (otherwise
    // no member of the orbit satisfies g) and the integer difference must
    // clear the arrow's threshold.
    for (const Arrow& a : g.arrows()) {
        const auto d = integer_difference(seed.at(a.first), seed.at(a.second));
        if (!d) {
            // No shift can create an integer difference across classes;
            // encode an unsatisfiable constraint.
            arrow_constraints_.push_back({0, 0, -1, 0});
            continue;
        }
        const int min = a.first.row < a.second.row ? 1 : 0;
        arrow_constraints_.push_back({vertex_index(n_, a.first),
                                      vertex_index(n_, a.second), to_ll(*d),
                                      min});
    }

    // Same-row same-class pairs below the top row must share an undirected
    // component of g; this does not depend on the shift.
    {
        const int m = triangle_size(n_);
        std::vector<int> comp(static_cast<std::size_t>(m));
        std::iota(comp.begin(), comp.end(), 0);
        const auto find = [&](int x) {
            while (comp[static_cast<std::size_t>(x)] != x)
                x = comp[static_cast<std::size_t>(x)] =
                    comp[static_cast<std::size_t>(
                        comp[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const Arrow& a : g.arrows())
            comp[static_cast<std::size_t>(
                find(vertex_index(n_, a.first)))] =
                find(vertex_index(n_, a.second));
        for (int k = 1; k < n_ && components_ok_; ++k)
            for (int i = 1; i < k && components_ok_; ++i)
                for (int j = i + 1; j <= k; ++j) {
                    if (!integer_difference(seed.at(k, i), seed.at(k, j)))
                        continue;
                    if (find(vertex_index(n_, {k, i})) !=
                        find(vertex_index(n_, {k, j}))) {
                        components_ok_ = false;
                        break;
                    }
                }
    }

    // Reduced-signature candidates: consecutive-row same-class pairs whose
    // down arrow the closure does not already force.
    const TriGraph gbar = build_Gbar(g);
    for (int r = 1; r < n_; ++r)
        for (int j = 1; j <= r + 1; ++j)
            for (int s = 1; s <= r; ++s) {
                const auto d =
                    integer_difference(seed.at(r + 1, j), seed.at(r, s));
                if (!d) continue;
                if (gbar.has_arrow({r + 1, j}, {r, s})) continue;
                candidate_tests_.push_back({vertex_index(n_, {r + 1, j}),
                                            vertex_index(n_, {r, s}),
                                            to_ll(*d)});
                candidates_.push_back({{r + 1, j}, {r, s}});
            }
    if (candidates_.size() > 64)
        throw Error("too many signature candidates for one mask");
}

bool OrbitContext::realization_at(const std::vector<int>& z) const {
    if (!components_ok_) return false;
    for (const Constraint& c : arrow_constraints_) {
        const long long v = c.base + z[static_cast<std::size_t>(c.src)] -
                            z[static_cast<std::size_t>(c.dst)];
        if (v < c.min) return false;
    }
    return true;
}

std::uint64_t OrbitContext::signature_mask(const std::vector<int>& z) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < candidate_tests_.size(); ++i) {
        const Candidate& c = candidate_tests_[i];
        if (c.base + z[static_cast<std::size_t>(c.src)] -
                z[static_cast<std::size_t>(c.dst)] >=
            0)
            mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::vector<Arrow> OrbitContext::mask_to_edges(std::uint64_t mask) const {
    std::vector<Arrow> out;
    for (std::size_t i = 0; i < candidates_.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) out.push_back(candidates_[i]);
    return out;
}

}  // namespace gtrel
