// Copyright 2026 The cactusrank Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "cactusrank/graph.hpp"

namespace cactusrank {

/// A graph and a divisor, as stored in the line-based text format:
///
///     # comment
///     n <vertex count>
///     e <u> <v>          one line per edge, parallel edges repeated
///     d <f_0> ... <f_n-1>
///
/// `n` comes first; `e` lines and the single `d` line follow in any order.
/// Blank lines and lines starting with '#' are ignored.
struct ProblemFile {
  Multigraph graph;
  Divisor divisor;
};

/// Throws ParseError (syntax, with line number) or InvalidGraphError (loop,
/// vertex out of range, disconnected graph, divisor length mismatch).
ProblemFile parse_problem(std::string_view text);

ProblemFile read_problem(const std::filesystem::path& path);

/// Canonical text: header, edges in stored order, divisor line. Parsing the
/// result gives back an identical graph and divisor.
std::string serialize_problem(const Multigraph& g, const Divisor& f);

}  // namespace cactusrank
