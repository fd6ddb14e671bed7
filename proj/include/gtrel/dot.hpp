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

#include "gtrel/classify.hpp"
#include "gtrel/trigraph.hpp"

namespace gtrel {

// DOT digraph with the triangle laid out on fixed coordinates (row n at the
// top), one node per vertex of the triangle, one edge per arrow.
std::string graph_dot(const TriGraph& g);

// DOT digraph of the signature lattice: one node per achieved signature
// (labeled with its edge set and tableau count), one edge per covering
// containment.
std::string lattice_dot(const ClassifyReport& report);

}  // namespace gtrel
