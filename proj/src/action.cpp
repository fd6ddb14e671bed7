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

#include "gtrel/action.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>

#include "gtrel/errors.hpp"
#include "gtrel/orbit.hpp"

namespace gtrel {

Generator parse_generator(const std::string& text) {
    if (text.size() < 3 || (text[0] != 'E' && text[0] != 'e'))
        throw ParseError("bad generator '" + text + "'");
    int r = 0;
    int c = 0;
    const std::string body = text.substr(1);
    const auto comma = body.find(',');
    try {
        if (comma != std::string::npos) {
            r = std::stoi(body.substr(0, comma));
            c = std::stoi(body.substr(comma + 1));
        } else if (body.size() == 2 &&
                   std::isdigit(static_cast<unsigned char>(body[0])) &&
                   std::isdigit(static_cast<unsigned char>(body[1]))) {
            r = body[0] - '0';
            c = body[1] - '0';
        } else {
            throw ParseError("bad generator '" + text + "'");
        }
    } catch (const std::logic_error&) {
        throw ParseError("bad generator '" + text + "'");
    }
    if (r < 1 || c < 1 || std::abs(r - c) > 1)
        throw ParseError("generator '" + text +
                         "' is not diagonal or next to the diagonal");
    Generator g;
    if (r == c) {
        g.kind = GenKind::diagonal;
        g.k = r;
    } else if (c == r + 1) {
        g.kind = GenKind::raising;
        g.k = r;
    } else {
        g.kind = GenKind::lowering;
        g.k = c;
    }
    return g;
}

std::string format_generator(const Generator& g) {
    int r = g.k;
    int c = g.k;
    if (g.kind == GenKind::raising) c = g.k + 1;
    if (g.kind == GenKind::lowering) r = g.k + 1;
    if (r <= 9 && c <= 9)
        return "E" + std::to_string(r) + std::to_string(c);
    return "E" + std::to_string(r) + "," + std::to_string(c);
}

ModuleVector::ModuleVector(Tableau seed) : seed_(std::move(seed)) {}

void ModuleVector::add_term(const ShiftVector& z, const Scalar& c) {
    if (c.is_zero()) return;
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), z,
        [](const auto& term, const ShiftVector& key) {
            return term.first < key;
        });
    if (it != terms_.end() && it->first == z) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
        return;
    }
    terms_.insert(it, {z, c});
}

const Scalar* ModuleVector::coefficient(const ShiftVector& z) const {
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), z,
        [](const auto& term, const ShiftVector& key) {
            return term.first < key;
        });
    if (it != terms_.end() && it->first == z) return &it->second;
    return nullptr;
}

ModuleVector ModuleVector::operator+(const ModuleVector& rhs) const {
    if (seed_ != rhs.seed_)
        throw DifferentModule("vectors are keyed to different seeds");
    ModuleVector out = *this;
    for (const auto& [z, c] : rhs.terms_) out.add_term(z, c);
    return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& rhs) const {
    if (seed_ != rhs.seed_)
        throw DifferentModule("vectors are keyed to different seeds");
    ModuleVector out = *this;
    for (const auto& [z, c] : rhs.terms_) out.add_term(z, -c);
    return out;
}

ModuleVector ModuleVector::scaled(const Scalar& c) const {
    ModuleVector out{seed_};
    if (c.is_zero()) return out;
    for (const auto& [z, coeff] : terms_) out.add_term(z, coeff * c);
    return out;
}

bool ModuleVector::operator==(const ModuleVector& rhs) const {
    if (seed_ != rhs.seed_ || terms_.size() != rhs.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != rhs.terms_[i].first) return false;
        if (terms_[i].second != rhs.terms_[i].second) return false;
    }
    return true;
}

std::string ModuleVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [z, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*T[" + shift(seed_, z).to_string() +
               "]";
    }
    return out;
}

ModuleVector basis_vector(const Tableau& t) {
    ModuleVector v{t};
    v.add_term(ShiftVector{t.n()}, Scalar{Rational(1)});
    return v;
}

namespace {

Poly entry_difference_poly(const Tableau& t, Vertex a, Vertex b) {
    return entry_poly(t.at(a)) - entry_poly(t.at(b));
}

// Denominator of both off-diagonal formulas: prod over j != i of
// (l(k,i) - l(k,j)); a zero factor means two equal entries in row k.
std::vector<Poly> row_denominator(const Tableau& t, int k, int i) {
    std::vector<Poly> den;
    for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        Poly f = entry_difference_poly(t, {k, i}, {k, j});
        if (f.is_zero())
            throw DegenerateRow("equal entries at (" + std::to_string(k) +
                                "," + std::to_string(i) + ") and (" +
                                std::to_string(k) + "," + std::to_string(j) +
                                ")");
        den.push_back(std::move(f));
    }
    return den;
}

Scalar raising_coefficient(const Tableau& t, int k, int i) {
    Poly num{Rational(1)};
    for (int j = 1; j <= k + 1; ++j)
        num = num * entry_difference_poly(t, {k, i}, {k + 1, j});
    return Scalar::ratio(-num, row_denominator(t, k, i));
}

Scalar lowering_coefficient(const Tableau& t, int k, int i) {
    Poly num{Rational(1)};
    for (int j = 1; j <= k - 1; ++j)
        num = num * entry_difference_poly(t, {k, i}, {k - 1, j});
    return Scalar::ratio(std::move(num), row_denominator(t, k, i));
}

Scalar diagonal_eigenvalue(const Tableau& t, int k) {
    Poly p{Rational(k - 1)};
    for (int i = 1; i <= k; ++i) p += entry_poly(t.at(k, i));
    for (int i = 1; i <= k - 1; ++i) p -= entry_poly(t.at(k - 1, i));
    return Scalar{std::move(p)};
}

ModuleVector act_with_context(const Generator& gen, const ModuleVector& v,
                              const OrbitContext& ctx) {
    const int n = v.seed().n();
    if (gen.kind == GenKind::diagonal) {
        if (gen.k < 1 || gen.k > n) throw Error("diagonal generator index");
    } else if (gen.k < 1 || gen.k > n - 1) {
        throw Error("off-diagonal generator index");
    }
    ModuleVector out{v.seed()};
    for (const auto& [z, c] : v.terms()) {
        const Tableau t = shift(v.seed(), z);
        if (gen.kind == GenKind::diagonal) {
            out.add_term(z, c * diagonal_eigenvalue(t, gen.k));
            continue;
        }
        const int step = gen.kind == GenKind::raising ? 1 : -1;
        for (int i = 1; i <= gen.k; ++i) {
            std::vector<int> zflat = z.values();
            zflat[static_cast<std::size_t>(vertex_index(n, {gen.k, i}))] +=
                step;
            if (!ctx.realization_at(zflat)) continue;
            const Scalar coeff = gen.kind == GenKind::raising
                                     ? raising_coefficient(t, gen.k, i)
                                     : lowering_coefficient(t, gen.k, i);
            out.add_term(ShiftVector{n, std::move(zflat)}, c * coeff);
        }
    }
    return out;
}

}  // namespace

ModuleVector act(const Generator& gen, const ModuleVector& v,
                 const TriGraph& g) {
    const OrbitContext ctx{g, v.seed()};
    return act_with_context(gen, v, ctx);
}

ModuleVector act_word(const std::vector<Generator>& word,
                      const ModuleVector& v, const TriGraph& g) {
    const OrbitContext ctx{g, v.seed()};
    ModuleVector out = v;
    for (const Generator& gen : word) out = act_with_context(gen, out, ctx);
    return out;
}

// ---------------------------------------------------------------------------
// Axiom verification. The symbolic checker below is the reference; the
// integer engine after it handles the common case (every entry a plain
// rational, small n) two orders of magnitude faster and falls back to the
// symbolic path whenever it cannot represent a value exactly.

namespace {

struct RelationSpec {
    std::string name;
    // residual = [a, b] - sum of rhs terms (generator, sign)
    Generator a, b;
    std::vector<std::pair<Generator, int>> rhs;
};

std::vector<RelationSpec> relation_specs(int n) {
    std::vector<RelationSpec> specs;
    const auto raising = [](int k) { return Generator{GenKind::raising, k}; };
    const auto lowering = [](int k) {
        return Generator{GenKind::lowering, k};
    };
    const auto diagonal = [](int k) {
        return Generator{GenKind::diagonal, k};
    };
    for (int k = 1; k <= n - 1; ++k)
        specs.push_back({"[" + format_generator(raising(k)) + "," +
                             format_generator(lowering(k)) + "]=" +
                             format_generator(diagonal(k)) + "-" +
                             format_generator(diagonal(k + 1)),
                         raising(k),
                         lowering(k),
                         {{diagonal(k), 1}, {diagonal(k + 1), -1}}});
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            specs.push_back({"[" + format_generator(diagonal(k)) + "," +
                                 format_generator(diagonal(l)) + "]=0",
                             diagonal(k),
                             diagonal(l),
                             {}});
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n - 1; ++l) {
            const int weight = (k == l ? 1 : 0) - (k == l + 1 ? 1 : 0);
            std::vector<std::pair<Generator, int>> rhs;
            if (weight != 0) rhs.push_back({raising(l), weight});
            specs.push_back({"[" + format_generator(diagonal(k)) + "," +
                                 format_generator(raising(l)) + "]=" +
                                 (weight == 0 ? "0" : std::to_string(weight) +
                                                          "*" +
                                                          format_generator(
                                                              raising(l))),
                             diagonal(k), raising(l), std::move(rhs)});
        }
    for (int k = 1; k <= n - 1; ++k)
        for (int l = k + 2; l <= n - 1; ++l) {
            specs.push_back({"[" + format_generator(raising(k)) + "," +
                                 format_generator(raising(l)) + "]=0",
                             raising(k),
                             raising(l),
                             {}});
            specs.push_back({"[" + format_generator(lowering(k)) + "," +
                                 format_generator(lowering(l)) + "]=0",
                             lowering(k),
                             lowering(l),
                             {}});
        }
    return specs;
}

void symbolic_axioms(const OrbitContext& ctx, const Tableau& t,
                     const std::vector<RelationSpec>& specs,
                     AxiomReport& report) {
    const ModuleVector v = basis_vector(t);
    for (const RelationSpec& spec : specs) {
        ModuleVector residual =
            act_with_context(spec.a, act_with_context(spec.b, v, ctx), ctx) -
            act_with_context(spec.b, act_with_context(spec.a, v, ctx), ctx);
        for (const auto& [gen, sign] : spec.rhs) {
            ModuleVector part = act_with_context(gen, v, ctx);
            if (sign < 0)
                residual = residual + part;
            else
                residual = residual - part;
        }
        ++report.relations_checked;
        if (!residual.is_zero())
            report.failures.push_back(
                {spec.name, t, residual.to_string()});
    }
}

// --- integer fast engine ---------------------------------------------------

struct FastBail {};  // value out of range; redo the tableau symbolically

struct Frac64 {
    long long num = 0;
    long long den = 1;
};

constexpr long long kFastLimit = (1LL << 62);

long long checked_ll(__int128 v) {
    if (v >= kFastLimit || v <= -kFastLimit) throw FastBail{};
    return static_cast<long long>(v);
}

Frac64 frac_make(__int128 num, __int128 den) {
    if (den == 0) throw FastBail{};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return {0, 1};
    const long long ln = checked_ll(num);
    const long long ld = checked_ll(den);
    const long long g = std::gcd(ln < 0 ? -ln : ln, ld);
    return {ln / g, ld / g};
}

Frac64 frac_add(const Frac64& a, const Frac64& b) {
    return frac_make(static_cast<__int128>(a.num) * b.den +
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
}

Frac64 frac_sub(const Frac64& a, const Frac64& b) {
    return frac_make(static_cast<__int128>(a.num) * b.den -
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
}

Frac64 frac_mul(const Frac64& a, const Frac64& b) {
    return frac_make(static_cast<__int128>(a.num) * b.num,
                     static_cast<__int128>(a.den) * b.den);
}

Frac64 frac_div(const Frac64& a, const Frac64& b) {
    if (b.num == 0) throw FastBail{};
    return frac_make(static_cast<__int128>(a.num) * b.den,
                     static_cast<__int128>(a.den) * b.num);
}

Frac64 frac_int(long long v) { return {v, 1}; }

// Linear combination keyed by a packed shift: three bits per triangle
// position holding delta + 2. Axiom words move any position by at most two,
// so the field never leaves [0, 4].
using FastKey = std::uint64_t;
using FastVec = std::vector<std::pair<FastKey, Frac64>>;

void fast_add_term(FastVec& vec, FastKey key, const Frac64& c) {
    if (c.num == 0) return;
    const auto it = std::lower_bound(
        vec.begin(), vec.end(), key,
        [](const auto& term, FastKey k) { return term.first < k; });
    if (it != vec.end() && it->first == key) {
        it->second = frac_add(it->second, c);
        if (it->second.num == 0) vec.erase(it);
        return;
    }
    vec.insert(it, {key, c});
}

struct FastEngine {
    int n = 0;
    int m = 0;  // triangle size
    FastKey identity = 0;
    std::vector<Frac64> value;  // entry offsets of the current tableau
    struct Constraint {
        int src, dst;
        long long base;
        int min;
    };
    std::vector<std::pair<int, int>> constraint_pairs;  // flat indices
    std::vector<int> constraint_min;
    std::vector<Constraint> constraints;  // rebased per tableau
    bool components_ok = true;
    bool unsat = false;  // an arrow difference is not an integer
    std::vector<int> scratch;  // decoded shift

    explicit FastEngine(const OrbitContext& ctx) : n(ctx.n()) {
        m = triangle_size(n);
        if (3 * m > 63) throw FastBail{};
        for (int p = 0; p < m; ++p)
            identity |= FastKey{2} << (3 * p);
        components_ok = ctx.components_ok();
        for (const Arrow& a : ctx.graph().arrows()) {
            constraint_pairs.push_back({vertex_index(n, a.first),
                                        vertex_index(n, a.second)});
            constraint_min.push_back(
                a.first.row < a.second.row ? 1 : 0);
        }
        scratch.resize(static_cast<std::size_t>(m));
    }

    // Loads one tableau; throws FastBail when an entry does not fit.
    void load(const Tableau& t) {
        value.clear();
        for (const Entry& e : t.entries()) {
            if (!e.sym.empty()) throw FastBail{};
            const Int& num = boost::multiprecision::numerator(e.off);
            const Int& den = boost::multiprecision::denominator(e.off);
            if (num >= kFastLimit || num <= -kFastLimit ||
                den >= kFastLimit)
                throw FastBail{};
            value.push_back({static_cast<long long>(num),
                             static_cast<long long>(den)});
        }
        constraints.clear();
        unsat = false;
        for (std::size_t i = 0; i < constraint_pairs.size(); ++i) {
            const auto [src, dst] = constraint_pairs[i];
            const Frac64 d = frac_sub(value[static_cast<std::size_t>(src)],
                                      value[static_cast<std::size_t>(dst)]);
            if (d.den != 1) {
                // A non-integer gap across an arrow rules out the whole
                // orbit (shifts only move entries by integers).
                unsat = true;
                constraints.clear();
                return;
            }
            constraints.push_back(
                {src, dst, d.num, constraint_min[i]});
        }
    }

    bool realization_at(FastKey key) {
        if (!components_ok || unsat) return false;
        for (int p = 0; p < m; ++p)
            scratch[static_cast<std::size_t>(p)] =
                static_cast<int>((key >> (3 * p)) & 7) - 2;
        for (const Constraint& c : constraints) {
            const long long v =
                c.base + scratch[static_cast<std::size_t>(c.src)] -
                scratch[static_cast<std::size_t>(c.dst)];
            if (v < c.min) return false;
        }
        return true;
    }

    Frac64 value_at(FastKey key, int pos) const {
        const int delta = static_cast<int>((key >> (3 * pos)) & 7) - 2;
        const Frac64& v = value[static_cast<std::size_t>(pos)];
        return {v.num + static_cast<long long>(delta) * v.den, v.den};
    }

    Frac64 entry(FastKey key, int row, int col) const {
        return value_at(key, vertex_index(n, {row, col}));
    }

    void apply(const Generator& gen, const FastVec& in, FastVec& out) {
        out.clear();
        for (const auto& [key, c] : in) {
            if (gen.kind == GenKind::diagonal) {
                Frac64 w = frac_int(gen.k - 1);
                for (int i = 1; i <= gen.k; ++i)
                    w = frac_add(w, entry(key, gen.k, i));
                for (int i = 1; i <= gen.k - 1; ++i)
                    w = frac_sub(w, entry(key, gen.k - 1, i));
                fast_add_term(out, key, frac_mul(c, w));
                continue;
            }
            const int step = gen.kind == GenKind::raising ? 1 : -1;
            for (int i = 1; i <= gen.k; ++i) {
                const int pos = vertex_index(n, {gen.k, i});
                const FastKey target =
                    key + (step > 0 ? (FastKey{1} << (3 * pos))
                                    : -(FastKey{1} << (3 * pos)));
                if (!realization_at(target)) continue;
                const Frac64 lki = entry(key, gen.k, i);
                Frac64 num = frac_int(gen.kind == GenKind::raising ? -1 : 1);
                if (gen.kind == GenKind::raising) {
                    for (int j = 1; j <= gen.k + 1; ++j)
                        num = frac_mul(
                            num, frac_sub(lki, entry(key, gen.k + 1, j)));
                } else {
                    for (int j = 1; j <= gen.k - 1; ++j)
                        num = frac_mul(
                            num, frac_sub(lki, entry(key, gen.k - 1, j)));
                }
                Frac64 den = frac_int(1);
                for (int j = 1; j <= gen.k; ++j) {
                    if (j == i) continue;
                    const Frac64 f = frac_sub(lki, entry(key, gen.k, j));
                    if (f.num == 0)
                        throw DegenerateRow(
                            "equal entries in row " + std::to_string(gen.k));
                    den = frac_mul(den, f);
                }
                fast_add_term(out, target, frac_mul(c, frac_div(num, den)));
            }
        }
    }
};

// Runs every relation on one tableau with the integer engine. Returns true
// when all residuals vanish; false means "rerun symbolically" (either a
// genuine nonzero residual or an unknown one).
bool fast_axioms(FastEngine& engine, const Tableau& t,
                 const std::vector<RelationSpec>& specs,
                 AxiomReport& report) {
    engine.load(t);
    const FastVec unit{{engine.identity, frac_int(1)}};
    FastVec ab, ba, tmp, residual;
    for (const RelationSpec& spec : specs) {
        engine.apply(spec.b, unit, tmp);
        engine.apply(spec.a, tmp, ab);
        engine.apply(spec.a, unit, tmp);
        engine.apply(spec.b, tmp, ba);
        residual = ab;
        for (const auto& [key, c] : ba)
            fast_add_term(residual, key, {-c.num, c.den});
        for (const auto& [gen, sign] : spec.rhs) {
            engine.apply(gen, unit, tmp);
            for (const auto& [key, c] : tmp)
                fast_add_term(residual, key,
                              {sign < 0 ? c.num : -c.num, c.den});
        }
        if (!residual.empty()) return false;
    }
    report.relations_checked += static_cast<long long>(specs.size());
    return true;
}

}  // namespace

AxiomReport verify_axioms(const TriGraph& g,
                          const std::vector<Tableau>& window,
                          AxiomEngine engine) {
    AxiomReport report;
    if (window.empty()) return report;
    const auto specs = relation_specs(g.n());

    // One orbit context per class pattern; window tableaux normally share
    // one orbit, so cache the last context and rebuild on mismatch.
    std::unique_ptr<OrbitContext> ctx;
    std::unique_ptr<FastEngine> fast;
    const auto same_orbit = [&](const Tableau& t) {
        if (!ctx) return false;
        const Tableau& s = ctx->seed();
        for (int i = 0; i < triangle_size(t.n()); ++i)
            if (!integer_difference(t.entries()[static_cast<std::size_t>(i)],
                                    s.entries()[static_cast<std::size_t>(i)]))
                return false;
        return true;
    };

    for (const Tableau& t : window) {
        if (t.n() != g.n()) throw Error("window tableau size mismatch");
        if (!same_orbit(t)) {
            ctx = std::make_unique<OrbitContext>(g, t);
            fast.reset();
            if (engine == AxiomEngine::automatic) {
                try {
                    fast = std::make_unique<FastEngine>(*ctx);
                } catch (const FastBail&) {
                    fast.reset();
                }
            }
        }
        ++report.tableaux_checked;
        if (fast) {
            try {
                if (fast_axioms(*fast, t, specs, report)) continue;
            } catch (const FastBail&) {
                // fall through to the symbolic path
            }
        }
        // The symbolic checker needs a context whose seed is this very
        // tableau so that term shifts stay small.
        const OrbitContext local{g, t};
        symbolic_axioms(local, t, specs, report);
    }
    return report;
}

}  // namespace gtrel
