// Copyright 2026 The betaroc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETAROC_ERRORS_HPP
#define BETAROC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betaroc {

/// Malformed or out-of-contract input data (empty class, non-finite score, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse failure in a scores file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Maximum-likelihood fit cannot be carried out (degenerate sample, ...).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace betaroc

#endif // BETAROC_ERRORS_HPP
