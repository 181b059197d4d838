// Copyright 2026 The wristsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wristsim {

/// A simulation or training run produced a non-finite or out-of-bound state.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries the file name and 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// The optimizer could not make progress (e.g. singular normal equations
/// at the damping ceiling).
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested an analysis outside the supported case (e.g. an overdamped
/// system passed to the underdamped step-response formula).
class UnsupportedCase : public std::invalid_argument {
public:
    explicit UnsupportedCase(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wristsim
