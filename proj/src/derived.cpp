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

#include "gtrel/derived.hpp"

#include <algorithm>
#include <numeric>

#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

// Component labels of the undirected graph underlying g, one per vertex.
std::vector<int> undirected_components(const TriGraph& g) {
    const int m = triangle_size(g.n());
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
        comp[static_cast<std::size_t>(find(vertex_index(g.n(), a.first)))] =
            find(vertex_index(g.n(), a.second));
    for (int i = 0; i < m; ++i)
        comp[static_cast<std::size_t>(i)] = find(i);
    return comp;
}

}  // namespace

bool satisfies(const Tableau& t, const TriGraph& g) {
    if (t.n() != g.n()) throw Error("graph size does not match tableau");
    for (const Arrow& a : g.arrows()) {
        const auto d = integer_difference(t.at(a.first), t.at(a.second));
        if (!d) return false;
        if (a.first.row < a.second.row) {  // up arrow
            if (*d <= 0) return false;
        } else {  // down or rightward arrow
            if (*d < 0) return false;
        }
    }
    return true;
}

bool is_realization(const Tableau& t, const TriGraph& g) {
    if (!satisfies(t, g)) return false;
    const auto comp = undirected_components(g);
    for (int k = 1; k < t.n(); ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                if (!integer_difference(t.at(k, i), t.at(k, j))) continue;
                if (comp[static_cast<std::size_t>(
                        vertex_index(t.n(), {k, i}))] !=
                    comp[static_cast<std::size_t>(
                        vertex_index(t.n(), {k, j}))])
                    return false;
            }
    return true;
}

TriGraph build_G_of_L(const Tableau& t) {
    const int n = t.n();
    TriGraph g{n};
    for (int r = 1; r < n; ++r)  // consecutive-row pairs, both directions
        for (int s = 1; s <= r; ++s)
            for (int j = 1; j <= r + 1; ++j) {
                const auto d =
                    integer_difference(t.at(r + 1, j), t.at(r, s));
                if (!d) continue;
                if (*d >= 0) g.add_arrow({r + 1, j}, {r, s});
                if (*d < 0) g.add_arrow({r, s}, {r + 1, j});
            }
    for (int j = 1; j <= n; ++j)  // top-row pairs
        for (int s = j + 1; s <= n; ++s) {
            const auto d = integer_difference(t.at(n, j), t.at(n, s));
            if (!d) continue;
            if (*d >= 0) g.add_arrow({n, j}, {n, s});
            if (*d < 0) g.add_arrow({n, s}, {n, j});
        }
    return g;
}

TriGraph build_Gbar(const TriGraph& g) {
    const int n = g.n();
    // Transitive reachability, then keep the readable pairs.
    const int m = triangle_size(n);
    std::vector<std::vector<char>> reach(
        static_cast<std::size_t>(m),
        std::vector<char>(static_cast<std::size_t>(m), 0));
    for (const Arrow& a : g.arrows())
        reach[static_cast<std::size_t>(vertex_index(n, a.first))]
             [static_cast<std::size_t>(vertex_index(n, a.second))] = 1;
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) {
            if (!reach[static_cast<std::size_t>(i)]
                      [static_cast<std::size_t>(k)])
                continue;
            for (int j = 0; j < m; ++j)
                if (reach[static_cast<std::size_t>(k)]
                         [static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j)] = 1;
        }
    TriGraph out{n};
    for (Vertex a : all_vertices(n))
        for (Vertex b : all_vertices(n)) {
            if (a == b) continue;
            const int dr = a.row - b.row;
            if (dr != 1 && dr != -1 && !(a.row == n && b.row == n)) continue;
            if (reach[static_cast<std::size_t>(vertex_index(n, a))]
                     [static_cast<std::size_t>(vertex_index(n, b))])
                out.add_arrow(a, b);
        }
    return out;
}

TriGraph graph_difference(const TriGraph& a, const TriGraph& b) {
    if (a.n() != b.n()) throw Error("graph sizes differ");
    TriGraph out{a.n()};
    for (const Arrow& arrow : a.arrows())
        if (!b.has_arrow(arrow.first, arrow.second))
            out.add_arrow(arrow.first, arrow.second);
    return out;
}

std::vector<Arrow> down_edges(const TriGraph& g) {
    std::vector<Arrow> out;
    for (const Arrow& a : g.arrows())
        if (a.first.row == a.second.row + 1) out.push_back(a);
    return out;
}

std::vector<Vertex> incident_vertices(const TriGraph& g) {
    std::vector<Vertex> out;
    for (const Arrow& a : g.arrows()) {
        out.push_back(a.first);
        out.push_back(a.second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Chain> maximal_chains(const TriGraph& g, const ShiftVector& z) {
    if (g.n() != z.n()) throw Error("shift vector size does not match graph");
    if (z.is_zero()) throw ZeroShift("maximal chains need a nonzero shift");
    const auto hot = [&](Vertex v) { return z.at(v) != 0; };
    // Only vertices of g (arrow endpoints) can sit on a path of g; a fully
    // isolated vertex yields no chain even when its shift is nonzero.
    const std::vector<Vertex> incident = incident_vertices(g);
    const auto extendable_back = [&](Vertex v) {
        for (Vertex u : g.in_neighbors(v))
            if (hot(u)) return true;
        return false;
    };

    std::vector<Chain> chains;
    Chain path;
    const int limit = triangle_size(g.n());
    const auto dfs = [&](auto&& self, Vertex v) -> void {
        if (static_cast<int>(path.size()) >= limit)
            throw Error("chain search exceeded the vertex count (cycle?)");
        path.push_back(v);
        bool extended = false;
        for (Vertex w : g.out_neighbors(v))
            if (hot(w)) {
                extended = true;
                self(self, w);
            }
        if (!extended) chains.push_back(path);
        path.pop_back();
    };
    for (Vertex v : incident)
        if (hot(v) && !extendable_back(v)) dfs(dfs, v);

    std::sort(chains.begin(), chains.end());
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    return chains;
}

}  // namespace gtrel
