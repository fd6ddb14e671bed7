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

#include <iosfwd>
#include <string>
#include <vector>

namespace gtrel::cli {

// Runs one subcommand (args exclude the program name) and returns the
// process exit code: 0 on success, 1 when a check fails (invalid graph,
// non-realization, nonzero residual) or a domain error occurs, 2 on
// malformed input (bad flags, unreadable or ill-formed files).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gtrel::cli
