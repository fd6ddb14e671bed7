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

#include "gtrel/tableau.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

// Tableau document: {"n": N, "rows": [[entry, ...], ...]} with rows listed
// top (length N) to bottom (length 1). An entry is {"q": "p/q"},
// {"sym": "pi", "q": "p/q"}, or — accepted on input only — a bare string
// such as "pi+2" or "3/2".
//
// Graph document: {"n": N, "arrows": [{"from": [r, c], "to": [r, c]}, ...]}.
//
// Readers throw ParseError with a position or field annotation; writers
// emit canonical form (sorted arrows, offsets as "p/q" strings), so that
// write(read(write(x))) == write(x) byte for byte.

Tableau read_tableau(const std::string& text);
TriGraph read_graph(const std::string& text);
std::string write_tableau(const Tableau& t);
std::string write_graph(const TriGraph& g);

// File variants; a missing or unreadable file is reported as ParseError.
Tableau load_tableau(const std::string& path);
TriGraph load_graph(const std::string& path);

// Shift vectors use the compact row format "0,0,0|1,0|-1" (top row first,
// and it must be all zeros).
ShiftVector parse_shift(const std::string& text);

}  // namespace gtrel
