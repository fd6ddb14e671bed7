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

#include "gtrel/scalar.hpp"
#include "gtrel/tableau.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

enum class GenKind { raising, lowering, diagonal };

// E(k,k+1) (raising), E(k+1,k) (lowering), or E(k,k) (diagonal).
struct Generator {
    GenKind kind = GenKind::diagonal;
    int k = 1;  // 1 <= k <= n-1 for raising/lowering, 1 <= k <= n diagonal

    bool operator==(const Generator& rhs) const {
        return kind == rhs.kind && k == rhs.k;
    }
};

// Accepts "Erc" with single digits ("E12", "E21", "E33") or "Er,c"; the row
// pair must differ by at most one. Throws ParseError.
Generator parse_generator(const std::string& text);
std::string format_generator(const Generator& g);

// Finite linear combination of same-orbit tableaux, keyed by integer shift
// relative to a seed. No zero coefficients are stored.
class ModuleVector {
  public:
    explicit ModuleVector(Tableau seed);

    const Tableau& seed() const { return seed_; }
    const std::vector<std::pair<ShiftVector, Scalar>>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    // Merges the coefficient into the term at z; drops the term when the
    // sum vanishes.
    void add_term(const ShiftVector& z, const Scalar& c);
    const Scalar* coefficient(const ShiftVector& z) const;

    ModuleVector operator+(const ModuleVector& rhs) const;
    ModuleVector operator-(const ModuleVector& rhs) const;
    ModuleVector scaled(const Scalar& c) const;
    bool operator==(const ModuleVector& rhs) const;
    bool operator!=(const ModuleVector& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    Tableau seed_;
    std::vector<std::pair<ShiftVector, Scalar>> terms_;  // sorted by shift
};

// Unit basis vector: coefficient 1 on t itself.
ModuleVector basis_vector(const Tableau& t);

// Applies one generator with exact coefficients; shifted tableaux that are
// not g-realizations are dropped as zero. Throws DegenerateRow when a
// retained term has two equal entries in the acting row (a vanishing
// coefficient denominator).
ModuleVector act(const Generator& gen, const ModuleVector& v,
                 const TriGraph& g);

// Left-to-right composition: the first word element acts first.
ModuleVector act_word(const std::vector<Generator>& word,
                      const ModuleVector& v, const TriGraph& g);

struct AxiomFailure {
    std::string relation;  // e.g. "[E12,E21]=E11-E22"
    Tableau at;
    std::string residual;
};

struct AxiomReport {
    long long tableaux_checked = 0;
    long long relations_checked = 0;
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

enum class AxiomEngine {
    automatic,  // exact integer fractions where entries allow, else symbolic
    symbolic,   // force the polynomial path (used to cross-check the other)
};

// Checks the defining commutation relations on every tableau of the window:
// [E(k,k+1),E(k+1,k)] = E(k,k) - E(k+1,k+1); [E(k,k),E(l,l)] = 0;
// [E(k,k),E(l,l+1)] = (delta(k,l) - delta(k,l+1)) E(l,l+1); and
// [E(k,k+1),E(l,l+1)] = [E(k+1,k),E(l+1,l)] = 0 for |k-l| >= 2. Residuals
// are exact; any nonzero one is reported.
AxiomReport verify_axioms(const TriGraph& g,
                          const std::vector<Tableau>& window,
                          AxiomEngine engine = AxiomEngine::automatic);

}  // namespace gtrel
