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

#include "gtrel/symbols.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "gtrel/errors.hpp"

namespace gtrel {

namespace {

std::mutex g_mutex;
// deque keeps references stable while the registry grows.
std::deque<std::string> g_names;
std::unordered_map<std::string, int> g_ids;

}  // namespace

int symbol_id(std::string_view name) {
    if (name.empty()) throw Error("empty symbol name");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_ids.find(std::string(name));
    if (it != g_ids.end()) return it->second;
    int id = static_cast<int>(g_names.size());
    g_names.emplace_back(name);
    g_ids.emplace(g_names.back(), id);
    return id;
}

const std::string& symbol_name(int id) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (id < 0 || id >= static_cast<int>(g_names.size()))
        throw Error("unknown symbol id " + std::to_string(id));
    return g_names[static_cast<std::size_t>(id)];
}

int symbol_count() {
    std::lock_guard<std::mutex> lock(g_mutex);
    return static_cast<int>(g_names.size());
}

}  // namespace gtrel
