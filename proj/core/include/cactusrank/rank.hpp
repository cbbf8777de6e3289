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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cactusrank/block_rank.hpp"
#include "cactusrank/cactus.hpp"
#include "cactusrank/graph.hpp"

namespace cactusrank {

struct RankOptions {
  /// Record one RankStep per eliminated block.
  bool trace = false;
  /// Answer deg(f) - genus directly when deg(f) > 2 genus - 2.
  bool fast_path = true;
};

/// What reducing `f` towards the root did with one block.
struct RankStep {
  std::size_t step = 0;  // 1-based
  BlockKind kind = BlockKind::kEdge;
  Vertex attach = 0;
  /// Goodness of the block's zero part; empty for bridges.
  std::optional<Goodness> goodness;
  /// Chips the reduction leaves inside the block: 1 for a bad cycle, else 0.
  int charge = 0;
  /// Degree still carried towards the root after the step.
  std::int64_t degree = 0;
};

struct RankResult {
  std::int64_t rank = -1;
  std::vector<RankStep> trace;
  /// Largest number of removed chips the elimination had to tabulate; 0 when
  /// the answer came from the fast path.
  std::int64_t chip_bound = 0;
};

/// Baker-Norine rank of `f` on the cactus `g` by block elimination in
/// O(n + genus * (rank + 2)) time; see rank.cpp.
///
/// Throws NotCactusError, InvalidGraphError (disconnected graph) and
/// std::invalid_argument (divisor length mismatch).
RankResult rank(const Multigraph& g, const Divisor& f,
                const RankOptions& options = {});

/// Same, along a caller-supplied scheme. Throws InvalidSchemeError when the
/// scheme does not replay on `g`.
RankResult rank(const Multigraph& g, const Divisor& f,
                const BlockEliminationScheme& scheme,
                const RankOptions& options = {});

/// -1 for negative degree, deg(f) - genus above the canonical degree
/// 2 genus - 2, otherwise nothing.
std::optional<std::int64_t> rank_fast_path(const Multigraph& g,
                                           const Divisor& f);

}  // namespace cactusrank
