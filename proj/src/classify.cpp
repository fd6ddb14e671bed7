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

#include "gtrel/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "gtrel/action.hpp"
#include "gtrel/derived.hpp"
#include "gtrel/errors.hpp"
#include "gtrel/orbit.hpp"

namespace gtrel {

namespace {

// Same shift orbit: identical top rows, integer offsets below.
bool same_orbit(const Tableau& s, const Tableau& r) {
    if (s.n() != r.n()) return false;
    const int n = s.n();
    for (const Vertex v : all_vertices(n)) {
        if (v.row == n) {
            if (!(s.at(v) == r.at(v))) return false;
        } else if (!integer_difference(s.at(v), r.at(v))) {
            return false;
        }
    }
    return true;
}

bool subset_of(const Signature& a, const Signature& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Signature signature(const Tableau& t, const TriGraph& g) {
    if (!is_realization(t, g))
        throw Error("tableau is not a realization of the graph");
    return down_edges(graph_difference(build_G_of_L(t), build_Gbar(g)));
}

bool in_submodule_basis(const Tableau& s, const Tableau& r,
                        const TriGraph& g) {
    if (!same_orbit(s, r))
        throw DifferentModule("tableaux lie in different shift orbits");
    return subset_of(signature(r, g), signature(s, g));
}

bool same_cyclic(const Tableau& r, const Tableau& q, const TriGraph& g) {
    if (!same_orbit(r, q))
        throw DifferentModule("tableaux lie in different shift orbits");
    return signature(r, g) == signature(q, g);
}

bool is_cyclic_generator(const Tableau& r, const TriGraph& g) {
    return signature(r, g).empty();
}

Vertex find_step(const Tableau& r, const ShiftVector& z, const TriGraph& g) {
    if (z.is_zero()) throw NotMonotone("translation is zero");
    if (!is_realization(r, g))
        throw NotMonotone("base tableau is not a realization");
    const Tableau end = shift(r, z);
    if (!is_realization(end, g))
        throw NotMonotone("translated tableau is not a realization");
    const Signature lo = signature(r, g);
    const Signature hi = signature(end, g);
    if (!subset_of(lo, hi))
        throw NotMonotone("translation loses signature edges");

    const int n = r.n();
    // Chain vertices first (they resolve the constrained cases), then every
    // nonzero coordinate row-major, so ties break deterministically.
    std::vector<Vertex> order;
    for (const Chain& chain : maximal_chains(build_Gbar(g), z))
        order.insert(order.end(), chain.begin(), chain.end());
    for (const Vertex v : all_vertices(n))
        if (v.row < n && z.at(v) != 0) order.push_back(v);

    std::set<Vertex> seen;
    for (const Vertex v : order) {
        if (z.at(v) == 0 || !seen.insert(v).second) continue;
        ShiftVector run{n};
        run.set(v.row, v.col, z.at(v));
        const Tableau mid = shift(r, run);
        if (!is_realization(mid, g)) continue;
        const Signature sm = signature(mid, g);
        if (subset_of(lo, sm) && subset_of(sm, hi)) return v;
    }
    throw NotMonotone("no single coordinate run keeps signatures nested");
}

std::vector<ShiftVector> decompose_translation(const Tableau& r,
                                               const ShiftVector& z,
                                               const TriGraph& g) {
    const int n = r.n();
    std::vector<ShiftVector> steps;
    Tableau cur = r;
    ShiftVector rem = z;
    while (!rem.is_zero()) {
        const Vertex v = find_step(cur, rem, g);
        const int run = rem.at(v);
        const int sign = run > 0 ? 1 : -1;
        for (int s = 0; s < (run > 0 ? run : -run); ++s)
            steps.push_back(delta(n, v.row, v.col, sign));
        ShiftVector whole{n};
        whole.set(v.row, v.col, run);
        cur = shift(cur, whole);
        rem.set(v.row, v.col, 0);
    }
    return steps;
}

bool precedes_one(const Tableau& r, const Tableau& q, const TriGraph& g) {
    if (r.n() != q.n()) return false;
    const int n = r.n();
    // A single generator fixes the tableau or moves one sub-top coordinate
    // by one, so anything else can be rejected before acting.
    int moved = 0;
    Vertex at{1, 1};
    int dir = 0;
    for (const Vertex v : all_vertices(n)) {
        const auto d = integer_difference(q.at(v), r.at(v));
        if (!d) return false;
        if (*d == 0) continue;
        if (v.row == n || *d > 1 || *d < -1 || ++moved > 1) return false;
        at = v;
        dir = static_cast<int>(*d);
    }
    ShiftVector dz{n};
    std::vector<Generator> gens;
    if (moved == 0) {
        for (int k = 1; k <= n; ++k)
            gens.push_back({GenKind::diagonal, k});
    } else {
        dz.set(at.row, at.col, dir);
        gens.push_back(
            {dir > 0 ? GenKind::raising : GenKind::lowering, at.row});
    }
    const ModuleVector base = basis_vector(r);
    for (const Generator& gen : gens)
        if (act(gen, base, g).coefficient(dz)) return true;
    return false;
}

namespace {

struct SweepAccum {
    // signature mask -> (count, lexicographically first shift)
    std::map<std::uint64_t, std::pair<long long, std::vector<int>>> classes;
    long long window = 0;
};

// Sweeps every shift whose first sub-top coordinate lies in [lo, hi] and
// whose remaining coordinates span [-radius, radius], in lexicographic
// order.
void sweep_slice(const OrbitContext& ctx, int radius, int lo, int hi,
                 SweepAccum& acc) {
    const int n = ctx.n();
    const int m = triangle_size(n);
    const int first = n;  // flat indices 0..n-1 hold the fixed top row
    std::vector<int> z(static_cast<std::size_t>(m), 0);
    for (int v0 = lo; v0 <= hi; ++v0) {
        z[static_cast<std::size_t>(first)] = v0;
        for (int i = first + 1; i < m; ++i)
            z[static_cast<std::size_t>(i)] = -radius;
        while (true) {
            if (ctx.realization_at(z)) {
                ++acc.window;
                const std::uint64_t mask = ctx.signature_mask(z);
                const auto it = acc.classes.find(mask);
                if (it == acc.classes.end())
                    acc.classes.emplace(mask, std::make_pair(1LL, z));
                else
                    ++it->second.first;
            }
            int i = m - 1;
            while (i > first && z[static_cast<std::size_t>(i)] == radius)
                z[static_cast<std::size_t>(i--)] = -radius;
            if (i == first) break;
            ++z[static_cast<std::size_t>(i)];
        }
    }
}

}  // namespace

std::vector<Tableau> enumerate_window(const TriGraph& g, const Tableau& seed,
                                      int radius) {
    if (radius < 0) throw Error("window radius is negative");
    const OrbitContext ctx{g, seed};
    const int n = seed.n();
    const int m = triangle_size(n);
    const int first = n;
    std::vector<Tableau> out;
    std::vector<int> z(static_cast<std::size_t>(m), 0);
    for (int i = first; i < m; ++i) z[static_cast<std::size_t>(i)] = -radius;
    while (true) {
        if (ctx.realization_at(z))
            out.push_back(shift(seed, ShiftVector{n, z}));
        int i = m - 1;
        while (i > first && z[static_cast<std::size_t>(i)] == radius)
            z[static_cast<std::size_t>(i--)] = -radius;
        if (i < first || z[static_cast<std::size_t>(i)] == radius) break;
        ++z[static_cast<std::size_t>(i)];
    }
    return out;
}

ClassifyReport classify_window(const TriGraph& g, const Tableau& seed,
                               int radius, int jobs) {
    if (radius < 0) throw Error("window radius is negative");
    const OrbitContext ctx{g, seed};
    if (!ctx.realization_at(
            std::vector<int>(static_cast<std::size_t>(triangle_size(seed.n())),
                             0)))
        throw Error("seed is not a realization of the graph");

    const int span = 2 * radius + 1;
    if (jobs < 1) jobs = 1;
    if (jobs > span) jobs = span;
    std::vector<SweepAccum> parts(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        sweep_slice(ctx, radius, -radius, radius, parts[0]);
    } else {
        std::vector<std::thread> workers;
        int lo = -radius;
        for (int w = 0; w < jobs; ++w) {
            const int take = span / jobs + (w < span % jobs ? 1 : 0);
            const int hi = lo + take - 1;
            SweepAccum* out = &parts[static_cast<std::size_t>(w)];
            workers.emplace_back([&ctx, radius, lo, hi, out] {
                sweep_slice(ctx, radius, lo, hi, *out);
            });
            lo = hi + 1;
        }
        for (std::thread& worker : workers) worker.join();
    }

    // Slices are merged in ascending order of their coordinate ranges, so
    // the first representative seen is the lexicographically first overall.
    std::map<std::uint64_t, std::pair<long long, std::vector<int>>> merged;
    long long window = 0;
    for (const SweepAccum& part : parts) {
        window += part.window;
        for (const auto& [mask, entry] : part.classes) {
            const auto it = merged.find(mask);
            if (it == merged.end())
                merged.emplace(mask, entry);
            else
                it->second.first += entry.first;
        }
    }

    ClassifyReport report;
    report.n = seed.n();
    report.radius = radius;
    report.window_size = window;
    for (const auto& [mask, entry] : merged)
        report.classes.push_back({ctx.mask_to_edges(mask), entry.first,
                                  ShiftVector{seed.n(), entry.second}});
    std::sort(report.classes.begin(), report.classes.end(),
              [](const SignatureClass& a, const SignatureClass& b) {
                  if (a.edges.size() != b.edges.size())
                      return a.edges.size() < b.edges.size();
                  return a.edges < b.edges;
              });

    const auto strict = [](const Signature& a, const Signature& b) {
        return a.size() < b.size() && subset_of(a, b);
    };
    const int count = static_cast<int>(report.classes.size());
    for (int i = 0; i < count; ++i) {
        if (report.classes[static_cast<std::size_t>(i)].edges.empty())
            report.generator_class = i;
        bool covered = false;
        for (int j = 0; j < count && !covered; ++j)
            covered = j != i &&
                      strict(report.classes[static_cast<std::size_t>(i)].edges,
                             report.classes[static_cast<std::size_t>(j)].edges);
        if (!covered) report.maximal_classes.push_back(i);
    }
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (!strict(report.classes[static_cast<std::size_t>(i)].edges,
                        report.classes[static_cast<std::size_t>(j)].edges))
                continue;
            bool between = false;
            for (int k = 0; k < count && !between; ++k)
                between =
                    strict(report.classes[static_cast<std::size_t>(i)].edges,
                           report.classes[static_cast<std::size_t>(k)].edges) &&
                    strict(report.classes[static_cast<std::size_t>(k)].edges,
                           report.classes[static_cast<std::size_t>(j)].edges);
            if (!between) report.covers.push_back({i, j});
        }
    return report;
}

Window build_finite_dimensional(const std::vector<Int>& lambda) {
    const int n = static_cast<int>(lambda.size());
    if (n < 2) throw Error("weight needs at least two parts");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[static_cast<std::size_t>(i)] <
            lambda[static_cast<std::size_t>(i + 1)])
            throw Error("weight is not dominant");

    Window out;
    out.radius = static_cast<int>(lambda.front() - lambda.back());

    // Entry values by row (1-based); top row fixed by the weight.
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n) + 1);
    rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j - 1)] =
            lambda[static_cast<std::size_t>(j - 1)] - (j - 1);

    const std::function<void(int, int)> fill = [&](int row, int col) {
        if (row == 0) {
            std::vector<Entry> entries;
            for (int r = n; r >= 1; --r)
                for (int c = 1; c <= r; ++c)
                    entries.push_back(
                        {"", Rational(rows[static_cast<std::size_t>(r)]
                                          [static_cast<std::size_t>(c - 1)])});
            out.tableaux.push_back(Tableau{n, std::move(entries)});
            return;
        }
        if (col > row) {
            fill(row - 1, 1);
            return;
        }
        if (col == 1) rows[static_cast<std::size_t>(row)]
            .assign(static_cast<std::size_t>(row), Int(0));
        const auto& above = rows[static_cast<std::size_t>(row + 1)];
        for (Int v = above[static_cast<std::size_t>(col)] + 1;
             v <= above[static_cast<std::size_t>(col - 1)]; ++v) {
            rows[static_cast<std::size_t>(row)]
                [static_cast<std::size_t>(col - 1)] = v;
            fill(row, col + 1);
        }
    };
    fill(n - 1, 1);
    return out;
}

}  // namespace gtrel
