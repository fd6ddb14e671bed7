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

#include "gtrel/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtrel/action.hpp"
#include "gtrel/classify.hpp"
#include "gtrel/derived.hpp"
#include "gtrel/dot.hpp"
#include "gtrel/errors.hpp"
#include "gtrel/json_io.hpp"
#include "gtrel/orbit.hpp"

namespace gtrel::cli {

namespace {

std::string vertex_text(Vertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string arrow_text(const Arrow& a) {
    return vertex_text(a.first) + " -> " + vertex_text(a.second);
}

std::string edge_set_text(const std::vector<Arrow>& edges) {
    std::string out = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ", ";
        out += arrow_text(edges[i]);
    }
    return out + "}";
}

void print_arrows(std::ostream& out, const TriGraph& g) {
    if (g.arrows().empty()) {
        out << "  (none)\n";
        return;
    }
    for (const Arrow& a : g.arrows()) out << "  " << arrow_text(a) << "\n";
}

std::vector<Int> parse_lambda(const std::string& text) {
    std::vector<Int> lambda;
    std::string token;
    const auto flush = [&] {
        if (token.empty()) throw ParseError("empty weight coordinate");
        try {
            std::size_t used = 0;
            lambda.push_back(Int(std::stoll(token, &used)));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
            throw ParseError("bad weight coordinate '" + token + "'");
        }
        token.clear();
    };
    for (const char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            token.push_back(c);
    }
    flush();
    return lambda;
}

nlohmann::json classify_json(const ClassifyReport& report) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["radius"] = report.radius;
    doc["window_size"] = report.window_size;
    doc["generator_class"] = report.generator_class;
    doc["maximal_classes"] = report.maximal_classes;
    doc["classes"] = nlohmann::json::array();
    for (const SignatureClass& cls : report.classes) {
        nlohmann::json edges = nlohmann::json::array();
        for (const Arrow& a : cls.edges) {
            nlohmann::json edge;
            edge["from"] = {a.first.row, a.first.col};
            edge["to"] = {a.second.row, a.second.col};
            edges.push_back(std::move(edge));
        }
        nlohmann::json item;
        item["edges"] = std::move(edges);
        item["count"] = cls.count;
        item["representative"] = cls.representative.to_string();
        doc["classes"].push_back(std::move(item));
    }
    doc["covers"] = nlohmann::json::array();
    for (const auto& [lower, upper] : report.covers)
        doc["covers"].push_back({lower, upper});
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact Gelfand-Tsetlin modules from relation graphs"};
    app.require_subcommand(1);

    std::string graph_path, tableau_path, graph_positional;
    std::string shift_text, gen_text, lambda_text;
    std::string emit = "text";
    int radius = 2;
    int jobs = 1;
    long long sample = 0;
    unsigned long long prng_seed = 0;
    bool with_basis = false;

    CLI::App* validate =
        app.add_subcommand("validate-graph", "Check the six conditions a "
                                             "relation graph must satisfy");
    validate->add_option("graph-file", graph_positional, "graph JSON file");
    validate->add_option("--graph", graph_path, "graph JSON file");

    CLI::App* realize = app.add_subcommand(
        "realize", "Test whether a tableau satisfies a graph and whether it "
                   "is a realization");
    realize->add_option("--graph", graph_path)->required();
    realize->add_option("--tableau", tableau_path)->required();

    CLI::App* derived = app.add_subcommand(
        "derived", "Build the tableau's difference graph, the relation "
                   "graph's closure, and their difference");
    derived->add_option("--graph", graph_path)->required();
    derived->add_option("--tableau", tableau_path)->required();
    derived->add_option("--emit", emit, "text | dot | json (dot and json "
                                        "emit the difference graph)");

    CLI::App* act_cmd = app.add_subcommand(
        "act", "Apply one generator to a tableau basis vector");
    act_cmd->add_option("--graph", graph_path)->required();
    act_cmd->add_option("--tableau", tableau_path)->required();
    act_cmd->add_option("--gen", gen_text, "generator, e.g. E12, E21, E33")
        ->required();

    CLI::App* chains_cmd = app.add_subcommand(
        "chains", "List maximal chains of nonzero shift coordinates");
    chains_cmd->add_option("--graph", graph_path)->required();
    chains_cmd->add_option("--shift", shift_text,
                           "shift vector, e.g. 0,0,0|1,0|-1 (top row first)")
        ->required();
    chains_cmd->add_option("--tableau", tableau_path,
                           "also list chains of this tableau's difference "
                           "graph");

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Group window realizations by signature");
    classify_cmd->add_option("--graph", graph_path)->required();
    classify_cmd->add_option("--tableau", tableau_path)->required();
    classify_cmd->add_option("--radius", radius, "window radius (default 2)");
    classify_cmd->add_option("--jobs", jobs, "worker threads (default 1)");
    classify_cmd->add_option("--emit", emit, "text | dot | json");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check the defining commutation relations exactly on a "
                  "window");
    verify_cmd->add_option("--graph", graph_path)->required();
    verify_cmd->add_option("--tableau", tableau_path)->required();
    verify_cmd->add_option("--radius", radius, "window radius (default 2)");
    verify_cmd->add_option("--sample", sample,
                           "check only this many window tableaux (0 = all)");
    verify_cmd->add_option("--seed", prng_seed, "PRNG seed for --sample");

    CLI::App* findim_cmd = app.add_subcommand(
        "findim", "Enumerate the standard tableaux of a dominant integral "
                  "weight");
    findim_cmd->add_option("--lambda", lambda_text,
                           "weight, e.g. 2,1,0 (non-increasing integers)")
        ->required();
    findim_cmd->add_flag("--basis", with_basis, "print the basis tableaux");
    findim_cmd->add_option("--emit", emit, "text | json");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gtrel");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) {
            if (graph_path.empty()) graph_path = graph_positional;
            if (graph_path.empty()) throw ParseError("missing graph file");
            const TriGraph g = load_graph(graph_path);
            const ValidationReport report = validate_relation_graph(g);
            if (!report.valid) {
                for (const Violation& v : report.violations)
                    out << "condition " << v.condition << " violated: "
                        << v.detail << "\n";
                return 1;
            }
            out << "valid relation graph\n";
            const auto pairs = adjoining_pairs(g);
            if (pairs.empty()) {
                out << "generic: yes\n";
            } else {
                out << "generic: no (" << pairs.size()
                    << " adjoining pair" << (pairs.size() == 1 ? "" : "s");
                for (const auto& [a, b] : pairs)
                    out << " " << vertex_text(a) << vertex_text(b);
                out << ")\n";
            }
            return 0;
        }

        if (app.got_subcommand(realize)) {
            const TriGraph g = load_graph(graph_path);
            const Tableau t = load_tableau(tableau_path);
            const bool sat = satisfies(t, g);
            const bool real = is_realization(t, g);
            out << "satisfies: " << (sat ? "yes" : "no")
                << "; realization: " << (real ? "yes" : "no") << "\n";
            return real ? 0 : 1;
        }

        if (app.got_subcommand(derived)) {
            const TriGraph g = load_graph(graph_path);
            const Tableau t = load_tableau(tableau_path);
            const TriGraph tg = build_G_of_L(t);
            const TriGraph closure = build_Gbar(g);
            const TriGraph difference = graph_difference(tg, closure);
            if (emit == "dot") {
                out << graph_dot(difference);
            } else if (emit == "json") {
                out << write_graph(difference);
            } else if (emit == "text") {
                out << "tableau graph:\n";
                print_arrows(out, tg);
                out << "closure:\n";
                print_arrows(out, closure);
                out << "difference:\n";
                print_arrows(out, difference);
                out << "down edges of difference:\n";
                for (const Arrow& a : down_edges(difference))
                    out << "  " << arrow_text(a) << "\n";
            } else {
                throw ParseError("unknown --emit '" + emit + "'");
            }
            return 0;
        }

        if (app.got_subcommand(act_cmd)) {
            const TriGraph g = load_graph(graph_path);
            const Tableau t = load_tableau(tableau_path);
            const Generator gen = parse_generator(gen_text);
            const ModuleVector image = act(gen, basis_vector(t), g);
            out << format_generator(gen) << " T[" << t.to_string()
                << "] =\n";
            if (image.is_zero()) {
                out << "  0\n";
            } else {
                for (const auto& [z, c] : image.terms())
                    out << "  (" << c.to_string() << ") T["
                        << shift(t, z).to_string() << "]\n";
            }
            return 0;
        }

        if (app.got_subcommand(chains_cmd)) {
            const TriGraph g = load_graph(graph_path);
            const ShiftVector z = parse_shift(shift_text);
            if (z.n() != g.n())
                throw ParseError("shift size does not match the graph");
            out << "graph chains:\n";
            for (const Chain& chain : maximal_chains(g, z)) {
                out << " ";
                for (std::size_t i = 0; i < chain.size(); ++i)
                    out << (i ? " -> " : " ") << vertex_text(chain[i]);
                out << "\n";
            }
            if (!tableau_path.empty()) {
                const Tableau t = load_tableau(tableau_path);
                out << "tableau graph chains:\n";
                for (const Chain& chain :
                     maximal_chains(build_G_of_L(t), z)) {
                    out << " ";
                    for (std::size_t i = 0; i < chain.size(); ++i)
                        out << (i ? " -> " : " ") << vertex_text(chain[i]);
                    out << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(classify_cmd)) {
            const TriGraph g = load_graph(graph_path);
            const Tableau t = load_tableau(tableau_path);
            const ClassifyReport report = classify_window(g, t, radius, jobs);
            if (emit == "dot") {
                out << lattice_dot(report);
            } else if (emit == "json") {
                out << classify_json(report).dump(2) << "\n";
            } else if (emit == "text") {
                out << "window: radius " << report.radius << ", "
                    << report.window_size << " realizations, "
                    << report.classes.size() << " signatures\n";
                for (std::size_t i = 0; i < report.classes.size(); ++i) {
                    const SignatureClass& cls = report.classes[i];
                    out << "class " << i << ": "
                        << edge_set_text(cls.edges) << " count=" << cls.count
                        << " rep=" << cls.representative.to_string();
                    if (static_cast<int>(i) == report.generator_class)
                        out << " (generators)";
                    out << "\n";
                }
                out << "maximal:";
                for (const int i : report.maximal_classes) out << " " << i;
                out << "\ncovers:";
                for (const auto& [lower, upper] : report.covers)
                    out << " " << lower << "<" << upper;
                out << "\n";
            } else {
                throw ParseError("unknown --emit '" + emit + "'");
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const TriGraph g = load_graph(graph_path);
            const Tableau t = load_tableau(tableau_path);
            std::vector<Tableau> window = enumerate_window(g, t, radius);
            if (sample > 0 &&
                sample < static_cast<long long>(window.size())) {
                std::mt19937_64 rng{prng_seed};
                std::shuffle(window.begin(), window.end(), rng);
                window.erase(window.begin() + static_cast<std::ptrdiff_t>(sample),
                             window.end());
            }
            const AxiomReport report = verify_axioms(g, window);
            for (const AxiomFailure& f : report.failures)
                out << "FAIL " << f.relation << " at T[" << f.at.to_string()
                    << "]: residual " << f.residual << "\n";
            out << "checked " << report.tableaux_checked << " tableaux, "
                << report.relations_checked << " relation instances: "
                << (report.ok() ? "all residuals zero"
                                : std::to_string(report.failures.size()) +
                                      " nonzero residuals")
                << "\n";
            return report.ok() ? 0 : 1;
        }

        if (app.got_subcommand(findim_cmd)) {
            const std::vector<Int> lambda = parse_lambda(lambda_text);
            const Window module = build_finite_dimensional(lambda);
            if (emit == "json") {
                nlohmann::json doc;
                doc["lambda"] = nlohmann::json::array();
                for (const Int& part : lambda)
                    doc["lambda"].push_back(static_cast<long long>(part));
                doc["dimension"] = module.tableaux.size();
                if (with_basis) {
                    doc["basis"] = nlohmann::json::array();
                    for (const Tableau& t : module.tableaux)
                        doc["basis"].push_back(
                            nlohmann::json::parse(write_tableau(t)));
                }
                out << doc.dump(2) << "\n";
            } else if (emit == "text") {
                out << "dimension = " << module.tableaux.size() << "\n";
                if (with_basis)
                    for (const Tableau& t : module.tableaux)
                        out << "  T[" << t.to_string() << "]\n";
            } else {
                throw ParseError("unknown --emit '" + emit + "'");
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace gtrel::cli
