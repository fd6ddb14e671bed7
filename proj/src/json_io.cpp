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

#include "gtrel/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

int read_n(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") ||
        !doc["n"].is_number_integer())
        throw ParseError("document needs an integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 2 || n > 64) throw ParseError("\"n\" out of range");
    return n;
}

Entry read_entry(const json& cell, const std::string& where) {
    try {
        if (cell.is_string()) return parse_entry(cell.get<std::string>());
        if (cell.is_number_integer())
            return Entry{"", Rational(cell.get<long long>())};
        if (cell.is_object()) {
            Entry e;
            if (cell.contains("sym")) {
                if (!cell["sym"].is_string())
                    throw ParseError("\"sym\" must be a string");
                e.sym = cell["sym"].get<std::string>();
            }
            if (!cell.contains("q") || !cell["q"].is_string())
                throw ParseError("entry needs a string field \"q\"");
            e.off = parse_rational(cell["q"].get<std::string>());
            return e;
        }
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": entry must be a string or an object");
}

}  // namespace

Tableau read_tableau(const std::string& text) {
    const json doc = parse_document(text);
    const int n = read_n(doc);
    if (!doc.contains("rows") || !doc["rows"].is_array() ||
        doc["rows"].size() != static_cast<std::size_t>(n))
        throw ParseError("tableau needs \"rows\" with " + std::to_string(n) +
                         " rows (top row first)");
    std::vector<Entry> entries;
    for (int row = n; row >= 1; --row) {
        const json& cells = doc["rows"][static_cast<std::size_t>(n - row)];
        const std::string where = "row of length " + std::to_string(row);
        if (!cells.is_array() ||
            cells.size() != static_cast<std::size_t>(row))
            throw ParseError(where + " malformed: expected " +
                             std::to_string(row) + " entries");
        for (int col = 1; col <= row; ++col)
            entries.push_back(read_entry(
                cells[static_cast<std::size_t>(col - 1)],
                where + ", column " + std::to_string(col)));
    }
    return Tableau{n, std::move(entries)};
}

TriGraph read_graph(const std::string& text) {
    const json doc = parse_document(text);
    const int n = read_n(doc);
    if (!doc.contains("arrows") || !doc["arrows"].is_array())
        throw ParseError("graph needs an array field \"arrows\"");
    TriGraph g{n};
    std::size_t index = 0;
    for (const json& item : doc["arrows"]) {
        const std::string where = "arrow " + std::to_string(index++);
        const auto vertex = [&](const char* key) {
            if (!item.is_object() || !item.contains(key) ||
                !item[key].is_array() || item[key].size() != 2 ||
                !item[key][0].is_number_integer() ||
                !item[key][1].is_number_integer())
                throw ParseError(where + ": \"" + key +
                                 "\" must be [row, col]");
            return Vertex{item[key][0].get<int>(), item[key][1].get<int>()};
        };
        const Vertex from = vertex("from");
        const Vertex to = vertex("to");
        try {
            g.add_arrow(from, to);
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return g;
}

std::string write_tableau(const Tableau& t) {
    json rows = json::array();
    for (int row = t.n(); row >= 1; --row) {
        json cells = json::array();
        for (int col = 1; col <= row; ++col) {
            const Entry& e = t.at(row, col);
            json cell;
            if (!e.sym.empty()) cell["sym"] = e.sym;
            cell["q"] = format_rational(e.off);
            cells.push_back(std::move(cell));
        }
        rows.push_back(std::move(cells));
    }
    json doc;
    doc["n"] = t.n();
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string write_graph(const TriGraph& g) {
    json arrows = json::array();
    for (const Arrow& a : g.arrows()) {
        json item;
        item["from"] = {a.first.row, a.first.col};
        item["to"] = {a.second.row, a.second.col};
        arrows.push_back(std::move(item));
    }
    json doc;
    doc["n"] = g.n();
    doc["arrows"] = std::move(arrows);
    return doc.dump(2) + "\n";
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Tableau load_tableau(const std::string& path) {
    try {
        return read_tableau(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

TriGraph load_graph(const std::string& path) {
    try {
        return read_graph(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ShiftVector parse_shift(const std::string& text) {
    std::vector<std::vector<int>> rows{{}};
    std::string token;
    const auto flush = [&](bool end_row) {
        if (token.empty()) throw ParseError("empty shift coordinate");
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            rows.back().push_back(value);
        } catch (const std::logic_error&) {
            throw ParseError("bad shift coordinate '" + token + "'");
        }
        token.clear();
        if (end_row) rows.push_back({});
    };
    for (const char c : text) {
        if (c == ',')
            flush(false);
        else if (c == '|')
            flush(true);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            token.push_back(c);
    }
    flush(false);

    const int n = static_cast<int>(rows.size());
    if (n < 2) throw ParseError("shift vector needs at least two rows");
    std::vector<int> flat;
    for (int row = n; row >= 1; --row) {
        const auto& values = rows[static_cast<std::size_t>(n - row)];
        if (values.size() != static_cast<std::size_t>(row))
            throw ParseError("shift row " + std::to_string(n - row + 1) +
                             " needs " + std::to_string(row) +
                             " coordinates (top row first)");
        flat.insert(flat.end(), values.begin(), values.end());
    }
    try {
        return ShiftVector{n, std::move(flat)};
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace gtrel
