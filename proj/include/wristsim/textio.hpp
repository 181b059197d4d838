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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wristsim {

/// Shortest round-trip decimal form of a double (%.17g, then trimmed).
/// All file output goes through this so identical values serialize
/// identically.
std::string format_double(double value);

/// Locale-independent double parse of a full token; returns false if the
/// token is not exactly one number.
bool parse_double(std::string_view token, double& out);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view line, char sep);

/// FNV-1a 64-bit hash, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// True for blank lines and '#' comment lines.
bool is_comment_or_blank(std::string_view line);

}  // namespace wristsim
