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

#include "gtrel/dot.hpp"

#include <sstream>

namespace gtrel {

namespace {

std::string node_name(Vertex v) {
    return "v" + std::to_string(v.row) + "_" + std::to_string(v.col);
}

std::string arrow_label(const Arrow& a) {
    return "(" + std::to_string(a.first.row) + "," +
           std::to_string(a.first.col) + ")->(" +
           std::to_string(a.second.row) + "," +
           std::to_string(a.second.col) + ")";
}

}  // namespace

std::string graph_dot(const TriGraph& g) {
    std::ostringstream out;
    out << "digraph triangle {\n";
    out << "  node [shape=circle, fixedsize=true, width=0.7];\n";
    for (const Vertex v : all_vertices(g.n())) {
        // Center each row; row n sits on top.
        const double x = v.col - 0.5 * (v.row + 1);
        const double y = v.row;
        out << "  " << node_name(v) << " [label=\"(" << v.row << ","
            << v.col << ")\", pos=\"" << x << "," << y << "!\"];\n";
    }
    for (const Arrow& a : g.arrows())
        out << "  " << node_name(a.first) << " -> " << node_name(a.second)
            << ";\n";
    out << "}\n";
    return out.str();
}

std::string lattice_dot(const ClassifyReport& report) {
    std::ostringstream out;
    out << "digraph signatures {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const SignatureClass& cls = report.classes[i];
        out << "  s" << i << " [label=\"{";
        for (std::size_t e = 0; e < cls.edges.size(); ++e) {
            if (e) out << ", ";
            out << arrow_label(cls.edges[e]);
        }
        out << "}\\n" << cls.count << " tableaux\"";
        if (static_cast<int>(i) == report.generator_class)
            out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [lower, upper] : report.covers)
        out << "  s" << lower << " -> s" << upper << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gtrel
