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

#include "gtrel/trigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gtrel/errors.hpp"

namespace gtrel {

TriGraph::TriGraph(int n) : n_(n) {
    if (n_ < 2) throw Error("graph needs n >= 2");
}

TriGraph::TriGraph(int n, const std::vector<Arrow>& arrows) : TriGraph(n) {
    for (const Arrow& a : arrows) add_arrow(a.first, a.second);
}

bool TriGraph::has_arrow(Vertex from, Vertex to) const {
    return std::binary_search(arrows_.begin(), arrows_.end(),
                              Arrow{from, to});
}

void TriGraph::add_arrow(Vertex from, Vertex to) {
    if (!in_triangle(n_, from) || !in_triangle(n_, to))
        throw Error("arrow endpoint outside the triangle");
    if (from == to) throw Error("self-loop arrow");
    const Arrow a{from, to};
    const auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a);
    if (it != arrows_.end() && *it == a) return;
    arrows_.insert(it, a);
}

std::vector<Vertex> TriGraph::out_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    const auto lo = std::lower_bound(arrows_.begin(), arrows_.end(),
                                     Arrow{v, Vertex{0, 0}});
    for (auto it = lo; it != arrows_.end() && it->first == v; ++it)
        out.push_back(it->second);
    return out;
}

std::vector<Vertex> TriGraph::in_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Arrow& a : arrows_)
        if (a.second == v) out.push_back(a.first);
    return out;
}

bool reachable(const TriGraph& g, Vertex a, Vertex b) {
    std::deque<Vertex> queue;
    std::vector<char> seen(static_cast<std::size_t>(triangle_size(g.n())), 0);
    for (Vertex v : g.out_neighbors(a)) {
        if (v == b) return true;
        const std::size_t idx =
            static_cast<std::size_t>(vertex_index(g.n(), v));
        if (!seen[idx]) {
            seen[idx] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.out_neighbors(v)) {
            if (w == b) return true;
            const std::size_t idx =
                static_cast<std::size_t>(vertex_index(g.n(), w));
            if (!seen[idx]) {
                seen[idx] = 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

namespace {

// reach[u][v] = true iff a directed path of length >= 1 runs u -> v.
std::vector<std::vector<char>> reach_matrix(const TriGraph& g) {
    const int m = triangle_size(g.n());
    std::vector<std::vector<char>> reach(
        static_cast<std::size_t>(m),
        std::vector<char>(static_cast<std::size_t>(m), 0));
    for (const Arrow& a : g.arrows())
        reach[static_cast<std::size_t>(vertex_index(g.n(), a.first))]
             [static_cast<std::size_t>(vertex_index(g.n(), a.second))] = 1;
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
    return reach;
}

std::string vertex_label(Vertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> adjoining_pairs(const TriGraph& g) {
    const auto reach = reach_matrix(g);
    const auto path = [&](Vertex a, Vertex b) {
        return reach[static_cast<std::size_t>(vertex_index(g.n(), a))]
                    [static_cast<std::size_t>(vertex_index(g.n(), b))] != 0;
    };
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int k = 2; k <= g.n() - 1; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                if (!path({k, i}, {k, j})) continue;
                bool blocked = false;
                for (int t = i + 1; t < j && !blocked; ++t)
                    blocked = path({k, i}, {k, t}) || path({k, t}, {k, j});
                if (!blocked) out.push_back({{k, i}, {k, j}});
            }
    return out;
}

ValidationReport validate_relation_graph(const TriGraph& g) {
    ValidationReport report;
    const int n = g.n();
    const auto reach = reach_matrix(g);
    const auto path = [&](Vertex a, Vertex b) {
        return reach[static_cast<std::size_t>(vertex_index(n, a))]
                    [static_cast<std::size_t>(vertex_index(n, b))] != 0;
    };

    // I: arrows connect consecutive rows or two top-row vertices.
    for (const Arrow& a : g.arrows()) {
        const int dr = a.first.row - a.second.row;
        const bool top_row = a.first.row == n && a.second.row == n;
        if (dr != 1 && dr != -1 && !top_row)
            report.violations.push_back(
                {"I",
                 {a.first, a.second},
                 "arrow " + vertex_label(a.first) + "->" +
                     vertex_label(a.second) +
                     " joins rows that are neither consecutive nor both the "
                     "top row"});
    }

    // II: no directed path from (k,j) to (k,i) with i < j.
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j)
                if (path({k, j}, {k, i}))
                    report.violations.push_back(
                        {"II",
                         {{k, j}, {k, i}},
                         "path from " + vertex_label({k, j}) + " to " +
                             vertex_label({k, i}) +
                             " runs right-to-left in row " +
                             std::to_string(k)});

    // III: no oriented cycles (multiple arrows cannot be represented).
    for (Vertex v : all_vertices(n))
        if (path(v, v))
            report.violations.push_back(
                {"III",
                 {v},
                 "oriented cycle through " + vertex_label(v)});

    // IV: same row below the top, same undirected component => some
    // oriented path between the two.
    {
        const int m = triangle_size(n);
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
                find(vertex_index(n, a.first)))] =
                find(vertex_index(n, a.second));
        for (int k = 1; k < n; ++k)
            for (int i = 1; i < k; ++i)
                for (int j = i + 1; j <= k; ++j) {
                    if (find(vertex_index(n, {k, i})) !=
                        find(vertex_index(n, {k, j})))
                        continue;
                    if (!path({k, i}, {k, j}) && !path({k, j}, {k, i}))
                        report.violations.push_back(
                            {"IV",
                             {{k, i}, {k, j}},
                             vertex_label({k, i}) + " and " +
                                 vertex_label({k, j}) +
                                 " share a component but no oriented path "
                                 "joins them"});
                }
    }

    // V: no crossing pair (k+1,r)->(k,j), (k+1,s)->(k,i) with r<s, i<j.
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j)
                for (int r = 1; r < k + 1; ++r)
                    for (int s = r + 1; s <= k + 1; ++s)
                        if (g.has_arrow({k + 1, r}, {k, j}) &&
                            g.has_arrow({k + 1, s}, {k, i}))
                            report.violations.push_back(
                                {"V",
                                 {{k + 1, r}, {k, j}, {k + 1, s}, {k, i}},
                                 "down arrows " + vertex_label({k + 1, r}) +
                                     "->" + vertex_label({k, j}) + " and " +
                                     vertex_label({k + 1, s}) + "->" +
                                     vertex_label({k, i}) + " cross"});

    // VI: each adjoining pair carries a completing pattern.
    for (const auto& [a, b] : adjoining_pairs(g)) {
        const int k = a.row;
        const int i = a.col;
        const int j = b.col;
        bool upper_relay = false;
        for (int p = 1; p <= k + 1; ++p)
            if (g.has_arrow({k, i}, {k + 1, p}) &&
                g.has_arrow({k + 1, p}, {k, j}))
                upper_relay = true;
        bool lower_relay = false;
        for (int q = 1; q <= k - 1; ++q)
            if (g.has_arrow({k, i}, {k - 1, q}) &&
                g.has_arrow({k - 1, q}, {k, j}))
                lower_relay = true;
        bool ordered_contacts = false;
        for (int s = 1; s < k + 1 && !ordered_contacts; ++s)
            for (int t = s + 1; t <= k + 1; ++t)
                if (g.has_arrow({k, i}, {k + 1, s}) &&
                    g.has_arrow({k + 1, t}, {k, j}))
                    ordered_contacts = true;
        if (!(upper_relay && lower_relay) && !ordered_contacts)
            report.violations.push_back(
                {"VI",
                 {a, b},
                 "adjoining pair " + vertex_label(a) + "," + vertex_label(b) +
                     " lacks a completing pattern"});
    }

    report.valid = report.violations.empty();
    return report;
}

bool is_generic(const TriGraph& g) { return adjoining_pairs(g).empty(); }

}  // namespace gtrel
