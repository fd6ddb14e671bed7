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
#include <string_view>

namespace gtrel {

// Process-wide registry mapping symbol class names ("pi", "sqrt2", ...) to
// dense indeterminate indices. Indices are assigned in order of first
// appearance, which fixes the monomial order for the whole run; the registry
// only grows. All three functions are safe to call concurrently.
int symbol_id(std::string_view name);
const std::string& symbol_name(int id);
int symbol_count();

}  // namespace gtrel
