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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtrel/action.hpp"
#include "gtrel/classify.hpp"
#include "gtrel/derived.hpp"
#include "gtrel/errors.hpp"
#include "gtrel/json_io.hpp"
#include "gtrel/orbit.hpp"

namespace {

using namespace gtrel;

std::string data_path(const std::string& name) {
    return std::string(GTREL_DATA_DIR) + "/" + name;
}

struct Wedge {
    TriGraph g = load_graph(data_path("wedge_graph_n3.json"));
    Tableau seed = load_tableau(data_path("wedge_seed_n3.json"));

    // z lives over coordinates (2,1), (2,2), (1,1); realizations pin
    // z(2,2) = 0 between the down arrow and the up arrow.
    Tableau at(int z21, int z11) const {
        ShiftVector z{3};
        z.set(2, 1, z21);
        z.set(1, 1, z11);
        return shift(seed, z);
    }
};

const Arrow kEdgeA{{3, 1}, {2, 1}};
const Arrow kEdgeB{{2, 2}, {1, 1}};

// Dimension of the simple module with highest weight lambda, computed from
// the hook-style product over positive roots instead of enumeration.
Rational product_dimension(const std::vector<Int>& lambda) {
    const int n = static_cast<int>(lambda.size());
    Rational dim{1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dim *= Rational(lambda[static_cast<std::size_t>(i)] -
                                lambda[static_cast<std::size_t>(j)] +
                                Int(j - i),
                            Int(j - i));
    return dim;
}

const SignatureClass* class_with(const ClassifyReport& report,
                                 const Signature& edges) {
    for (const SignatureClass& c : report.classes)
        if (c.edges == edges) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("signatures of the example seeds") {
    const Wedge w;
    // At the seed, l22 - l11 = 2 lights the only reduced down edge.
    CHECK(signature(w.seed, w.g) == Signature{kEdgeB});
    CHECK(signature(w.at(-2, 3), w.g) == Signature{kEdgeA});
    CHECK(signature(w.at(0, 3), w.g).empty());
    CHECK(signature(w.at(-2, 0), w.g) == Signature{kEdgeB, kEdgeA});

    const TriGraph dg = load_graph(data_path("diamond_graph_n4.json"));
    const Tableau ds = load_tableau(data_path("diamond_seed_n4.json"));
    CHECK(signature(ds, dg) ==
          Signature{{{4, 1}, {3, 1}}, {{4, 4}, {3, 3}}});

    // Non-realizations are rejected.
    const Tableau t1 = load_tableau(data_path("wedge_t1_n3.json"));
    CHECK_THROWS_AS(signature(t1, w.g), Error);
}

TEST_CASE("orbit context agrees with the direct definitions") {
    std::mt19937_64 rng{99};
    std::uniform_int_distribution<int> step(-4, 4);
    for (const auto& [graph_name, seed_name] :
         std::vector<std::pair<const char*, const char*>>{
             {"wedge_graph_n3.json", "wedge_seed_n3.json"},
             {"diamond_graph_n4.json", "diamond_seed_n4.json"},
             {"zigzag_graph_n4.json", "zigzag_seed_n4.json"}}) {
        CAPTURE(graph_name);
        const TriGraph g = load_graph(data_path(graph_name));
        const Tableau seed = load_tableau(data_path(seed_name));
        const OrbitContext ctx{g, seed};
        for (int trial = 0; trial < 200; ++trial) {
            ShiftVector z{g.n()};
            for (int row = g.n() - 1; row >= 1; --row)
                for (int col = 1; col <= row; ++col)
                    z.set(row, col, step(rng));
            const Tableau t = shift(seed, z);
            const bool direct = is_realization(t, g);
            CHECK(ctx.realization_at(z.values()) == direct);
            if (!direct) continue;
            CHECK(ctx.mask_to_edges(ctx.signature_mask(z.values())) ==
                  signature(t, g));
        }
    }
}

TEST_CASE("submodule membership follows signature inclusion") {
    const Wedge w;
    const Tableau gen_t = w.at(0, 3);    // signature {}
    const Tableau mid = w.at(0, 0);      // signature {B}
    const Tableau other = w.at(-2, 3);   // signature {A}
    const Tableau deep = w.at(-2, 0);    // signature {A, B}

    // Every tableau lies in the basis of the submodule its generator class
    // spans, and membership is monotone along inclusion.
    CHECK(in_submodule_basis(deep, gen_t, w.g));
    CHECK(in_submodule_basis(mid, gen_t, w.g));
    CHECK(in_submodule_basis(deep, mid, w.g));
    CHECK(in_submodule_basis(mid, mid, w.g));
    // ...but not in the other direction, and not across incomparable
    // signatures.
    CHECK(!in_submodule_basis(gen_t, deep, w.g));
    CHECK(!in_submodule_basis(gen_t, mid, w.g));
    CHECK(!in_submodule_basis(mid, other, w.g));
    CHECK(!in_submodule_basis(other, mid, w.g));

    CHECK(same_cyclic(mid, w.at(1, -4), w.g));  // both {B}
    CHECK(!same_cyclic(mid, gen_t, w.g));
    CHECK(is_cyclic_generator(gen_t, w.g));
    CHECK(!is_cyclic_generator(deep, w.g));

    // Different top rows mean different modules.
    const Tableau foreign = load_tableau(data_path("wedge_t2_n3.json"));
    CHECK_THROWS_AS(in_submodule_basis(foreign, gen_t, w.g),
                    DifferentModule);
    CHECK_THROWS_AS(same_cyclic(foreign, gen_t, w.g), DifferentModule);
}

TEST_CASE("find_step returns a coordinate whose full run stays sandwiched") {
    const Wedge w;

    SUBCASE("single-coordinate translations step on that coordinate") {
        ShiftVector z{3};
        z.set(1, 1, -5);
        CHECK(find_step(w.seed, z, w.g) == Vertex{1, 1});
    }

    SUBCASE("returned runs satisfy the documented contract") {
        const std::vector<std::pair<int, int>> targets = {
            {1, 1}, {3, -3}, {-3, 1}, {-4, -4}, {2, -1}};
        for (const auto& [z21, z11] : targets) {
            CAPTURE(z21);
            CAPTURE(z11);
            ShiftVector z{3};
            z.set(2, 1, z21);
            z.set(1, 1, z11);
            const Signature from = signature(w.seed, w.g);
            const Signature to = signature(shift(w.seed, z), w.g);
            if (!std::includes(to.begin(), to.end(), from.begin(),
                               from.end()))
                continue;  // outside the precondition
            const Vertex v = find_step(w.seed, z, w.g);
            CHECK(z.at(v) != 0);
            ShiftVector run{3};
            run.set(v.row, v.col, z.at(v));
            const Tableau after = shift(w.seed, run);
            CHECK(is_realization(after, w.g));
            const Signature sig_after = signature(after, w.g);
            CHECK(std::includes(sig_after.begin(), sig_after.end(),
                                from.begin(), from.end()));
            CHECK(std::includes(to.begin(), to.end(), sig_after.begin(),
                                sig_after.end()));
        }
    }

    SUBCASE("violated preconditions raise NotMonotone") {
        CHECK_THROWS_AS(find_step(w.seed, ShiftVector{3}, w.g), NotMonotone);
        // Endpoint leaves the realization set: z(2,2) must stay zero.
        CHECK_THROWS_AS(find_step(w.seed, delta(3, 2, 2, 1), w.g),
                        NotMonotone);
        // Endpoint signature drops the seed's edge B (l11 climbs past l22).
        ShiftVector z{3};
        z.set(1, 1, 4);
        CHECK_THROWS_AS(find_step(w.seed, z, w.g), NotMonotone);
    }
}

TEST_CASE("decompose_translation yields nested unit steps") {
    const Wedge w;

    SUBCASE("a doubled coordinate gives two copies of its unit") {
        ShiftVector z{3};
        z.set(1, 1, -2);
        const auto steps = decompose_translation(w.seed, z, w.g);
        CHECK(steps == std::vector<ShiftVector>{delta(3, 1, 1, -1),
                                                delta(3, 1, 1, -1)});
    }

    SUBCASE("prefixes stay realizations and signatures never lose edges") {
        std::mt19937_64 rng{314};
        std::uniform_int_distribution<int> pick(-4, 4);
        int accepted = 0;
        while (accepted < 25) {
            const int z21 = pick(rng), z11 = pick(rng);
            ShiftVector z{3};
            z.set(2, 1, z21);
            z.set(1, 1, z11);
            if (z.is_zero()) continue;
            const Signature from = signature(w.seed, w.g);
            const Signature to = signature(shift(w.seed, z), w.g);
            if (!std::includes(to.begin(), to.end(), from.begin(),
                               from.end()))
                continue;
            ++accepted;

            const auto steps = decompose_translation(w.seed, z, w.g);
            ShiftVector sum{3};
            for (const ShiftVector& s : steps) sum = sum + s;
            CHECK(sum == z);

            Signature prev = from;
            ShiftVector prefix{3};
            for (const ShiftVector& s : steps) {
                // Unit steps move one coordinate by one.
                int moved = 0;
                for (int value : s.values()) moved += value != 0;
                CHECK(moved == 1);
                prefix = prefix + s;
                const Tableau here = shift(w.seed, prefix);
                REQUIRE(is_realization(here, w.g));
                const Signature sig = signature(here, w.g);
                CHECK(std::includes(sig.begin(), sig.end(), prev.begin(),
                                    prev.end()));
                prev = sig;
            }
            CHECK(prev == to);
        }
    }

    SUBCASE("runs are whole: each coordinate appears in one block") {
        ShiftVector z{3};
        z.set(2, 1, -3);
        z.set(1, 1, 2);
        const auto steps = decompose_translation(w.seed, z, w.g);
        REQUIRE(steps.size() == 5);
        std::vector<Vertex> order;
        for (const ShiftVector& s : steps)
            for (Vertex v : all_vertices(3))
                if (v.row < 3 && s.at(v) != 0) order.push_back(v);
        // Adjacent equal, no vertex revisited after a break.
        std::set<Vertex> seen;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && order[i] == order[i - 1]) continue;
            CHECK(seen.insert(order[i]).second);
        }
    }
}

TEST_CASE("single-generator precedence") {
    const Wedge w;

    // Raising the (2,1) coordinate: E23 carries the seed onto it.
    CHECK(precedes_one(w.seed, w.at(1, 0), w.g));
    // Lowering the (1,1) coordinate: E21.
    CHECK(precedes_one(w.seed, w.at(0, -1), w.g));
    // A diagonal generator fixes the tableau with nonzero eigenvalue.
    CHECK(precedes_one(w.seed, w.seed, w.g));
    // Two coordinates at once cannot come from one generator.
    CHECK(!precedes_one(w.seed, w.at(1, -1), w.g));
    // Neither can a two-step run on one coordinate.
    CHECK(!precedes_one(w.seed, w.at(2, 0), w.g));
    // Different orbits never precede.
    const Tableau foreign = load_tableau(data_path("wedge_t2_n3.json"));
    CHECK(!precedes_one(w.seed, foreign, w.g));
}

TEST_CASE("window enumeration") {
    const Wedge w;
    const auto window = enumerate_window(w.g, w.seed, 4);
    CHECK(window.size() == 81);  // 9 x 9 free coordinates, z(2,2) pinned
    for (const Tableau& t : window) CHECK(is_realization(t, w.g));
    CHECK(std::count(window.begin(), window.end(), w.seed) == 1);

    // Enumeration is lexicographic in the flat shift coordinates.
    const auto small = enumerate_window(w.g, w.seed, 1);
    REQUIRE(small.size() == 9);
    CHECK(small.front() == w.at(-1, -1));
    CHECK(small.back() == w.at(1, 1));

    CHECK_THROWS_AS(enumerate_window(w.g, w.seed, -1), Error);
    CHECK(enumerate_window(w.g, w.seed, 0) ==
          std::vector<Tableau>{w.seed});
}

TEST_CASE("classification of the wedge window") {
    const Wedge w;
    const ClassifyReport report = classify_window(w.g, w.seed, 4);

    CHECK(report.n == 3);
    CHECK(report.radius == 4);
    CHECK(report.window_size == 81);
    REQUIRE(report.classes.size() == 4);

    const auto* none = class_with(report, {});
    const auto* only_a = class_with(report, {kEdgeA});
    const auto* only_b = class_with(report, {kEdgeB});
    const auto* both = class_with(report, {kEdgeB, kEdgeA});
    REQUIRE(none != nullptr);
    REQUIRE(only_a != nullptr);
    REQUIRE(only_b != nullptr);
    REQUIRE(both != nullptr);

    CHECK(none->count == 12);
    CHECK(only_a->count == 6);
    CHECK(only_b->count == 42);
    CHECK(both->count == 21);

    // Representatives are the lexicographically first members and do carry
    // the class signature.
    CHECK(none->representative.to_string() == "0,0,0|-1,0|3");
    CHECK(both->representative.to_string() == "0,0,0|-4,0|-4");
    for (const SignatureClass& c : report.classes)
        CHECK(signature(shift(w.seed, c.representative), w.g) == c.edges);

    // Lattice shape: empty at the bottom, the two singletons between, the
    // full signature on top.
    CHECK(report.generator_class != -1);
    CHECK(report.classes[static_cast<std::size_t>(report.generator_class)]
              .edges.empty());
    REQUIRE(report.maximal_classes.size() == 1);
    CHECK(report.classes[static_cast<std::size_t>(
                             report.maximal_classes[0])]
              .edges.size() == 2);
    CHECK(report.covers.size() == 4);

    // The same report arrives from a threaded sweep.
    const ClassifyReport threaded = classify_window(w.g, w.seed, 4, 3);
    CHECK(threaded.window_size == report.window_size);
    REQUIRE(threaded.classes.size() == report.classes.size());
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        CHECK(threaded.classes[i].edges == report.classes[i].edges);
        CHECK(threaded.classes[i].count == report.classes[i].count);
        CHECK(threaded.classes[i].representative ==
              report.classes[i].representative);
    }
    CHECK(threaded.covers == report.covers);
    CHECK(threaded.maximal_classes == report.maximal_classes);

    // A seed outside the realization set is rejected.
    const Tableau t1 = load_tableau(data_path("wedge_t1_n3.json"));
    CHECK_THROWS_AS(classify_window(w.g, t1, 2), Error);
}

TEST_CASE("classification of the diamond window") {
    const TriGraph g = load_graph(data_path("diamond_graph_n4.json"));
    const Tableau seed = load_tableau(data_path("diamond_seed_n4.json"));
    const ClassifyReport report = classify_window(g, seed, 2);

    // Of the sixteen subsets of the four integral inter-row pairs, the four
    // demanding the third edge without the second are unreachable: the top
    // entries l42 = 1 and l43 = 0 sit one apart, so l43 can reach row three
    // only after l42 does.
    REQUIRE(report.classes.size() == 12);
    const Arrow e1{{4, 1}, {3, 1}};
    const Arrow e2{{4, 2}, {3, 2}};
    const Arrow e3{{4, 3}, {3, 2}};
    const Arrow e4{{4, 4}, {3, 3}};
    std::set<Signature> achieved;
    for (const SignatureClass& c : report.classes)
        achieved.insert(c.edges);
    std::set<Signature> expect;
    for (int mask = 0; mask < 16; ++mask) {
        if ((mask & 4) && !(mask & 2)) continue;  // e3 without e2
        Signature s;
        if (mask & 1) s.push_back(e1);
        if (mask & 2) s.push_back(e2);
        if (mask & 4) s.push_back(e3);
        if (mask & 8) s.push_back(e4);
        std::sort(s.begin(), s.end());
        expect.insert(s);
    }
    CHECK(achieved == expect);
}

TEST_CASE("standard tableaux of a dominant weight") {
    SUBCASE("hand counts") {
        CHECK(build_finite_dimensional({Int(0), Int(0)}).tableaux.size() ==
              1);
        CHECK(build_finite_dimensional({Int(1), Int(0)}).tableaux.size() ==
              2);
        CHECK(build_finite_dimensional({Int(2), Int(1), Int(0)})
                  .tableaux.size() == 8);
    }

    SUBCASE("counts match the product formula") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= a; ++b) {
                const std::vector<Int> lambda{Int(a), Int(b), Int(0)};
                CAPTURE(a);
                CAPTURE(b);
                CHECK(Rational(Int(build_finite_dimensional(lambda)
                                       .tableaux.size())) ==
                      product_dimension(lambda));
            }
        const std::vector<Int> big{Int(3), Int(1), Int(1), Int(0)};
        CHECK(Rational(Int(
                  build_finite_dimensional(big).tableaux.size())) ==
              product_dimension(big));
    }

    SUBCASE("members are pairwise distinct standard tableaux") {
        const Window module =
            build_finite_dimensional({Int(2), Int(1), Int(0)});
        std::set<Tableau> unique(module.tableaux.begin(),
                                 module.tableaux.end());
        CHECK(unique.size() == module.tableaux.size());
        for (const Tableau& t : module.tableaux)
            for (int k = 2; k <= 3; ++k)
                for (int i = 1; i < k; ++i) {
                    const auto down =
                        integer_difference(t.at(k, i), t.at(k - 1, i));
                    const auto up =
                        integer_difference(t.at(k - 1, i), t.at(k, i + 1));
                    REQUIRE(down.has_value());
                    REQUIRE(up.has_value());
                    CHECK(*down >= 0);
                    CHECK(*up >= 1);
                }
    }

    SUBCASE("invalid weights are rejected") {
        CHECK_THROWS_AS(build_finite_dimensional({Int(0), Int(1)}), Error);
        CHECK_THROWS_AS(build_finite_dimensional({Int(3)}), Error);
        CHECK_THROWS_AS(build_finite_dimensional({}), Error);
    }
}

TEST_CASE("submodule closure under single generators") {
    // For sampled pairs (r, s) with nested signatures, every generator
    // keeps s inside the basis of the cyclic submodule generated by r.
    const Wedge w;
    const auto window = enumerate_window(w.g, w.seed, 3);
    std::mt19937_64 rng{626};
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    std::vector<Generator> gens;
    for (const char* name : {"E12", "E23", "E21", "E32", "E11", "E22", "E33"})
        gens.push_back(parse_generator(name));

    int pairs = 0;
    while (pairs < 40) {
        const Tableau& r = window[pick(rng)];
        const Tableau& s = window[pick(rng)];
        if (!in_submodule_basis(s, r, w.g)) continue;
        ++pairs;
        for (const Generator& e : gens) {
            const ModuleVector image = act(e, basis_vector(s), w.g);
            for (const auto& [z, c] : image.terms()) {
                CHECK(!c.is_zero());
                CHECK(in_submodule_basis(shift(s, z), r, w.g));
            }
        }
    }
}
