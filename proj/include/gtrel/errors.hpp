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

#include <stdexcept>
#include <string>

namespace gtrel {

// Base class for every error raised by the library. Catching this (or one of
// the named subclasses) lets callers distinguish domain failures from
// programming errors; the CLI maps ParseError to exit code 2 and everything
// else derived from Error to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by the zero element of the rational-function field.
struct ZeroDivision : Error {
    explicit ZeroDivision(const std::string& msg) : Error(msg) {}
};

// Division whose divisor cannot be represented: the numerator of the divisor
// has degree > 1 and does not divide the dividend exactly. Denominators are
// kept as products of linear factors, so nothing else is expressible.
struct NonLinearDivisor : Error {
    explicit NonLinearDivisor(const std::string& msg) : Error(msg) {}
};

// Attempt to shift an entry of the top row, which is fixed for a module.
struct TopRowImmutable : Error {
    explicit TopRowImmutable(const std::string& msg) : Error(msg) {}
};

// A shift-dependent operation received the zero shift vector.
struct ZeroShift : Error {
    explicit ZeroShift(const std::string& msg) : Error(msg) {}
};

// Two entries in one row coincide where a generator coefficient needs their
// difference in a denominator.
struct DegenerateRow : Error {
    explicit DegenerateRow(const std::string& msg) : Error(msg) {}
};

// The preconditions of the constructive step search do not hold: the shift is
// zero, an endpoint is not a realization, or the down-edge sets fail to be
// ordered by inclusion.
struct NotMonotone : Error {
    explicit NotMonotone(const std::string& msg) : Error(msg) {}
};

// Two tableaux do not belong to one integer-shift orbit, so membership and
// cyclicity queries between them are meaningless.
struct DifferentModule : Error {
    explicit DifferentModule(const std::string& msg) : Error(msg) {}
};

// Malformed input text: unparseable JSON, entries, shifts, or flags.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace gtrel
