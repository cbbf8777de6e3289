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
#include <functional>
#include <map>
#include <vector>

#include "cactusrank/graph.hpp"

namespace cactusrank {

// Ground truth for small instances of any connected loop-free multigraph,
// built only on chip-firing and the definition of rank.

/// The q-reduced representative of a linear equivalence class together with
/// a firing vector witnessing the equivalence: values = f + firing * L.
struct ReducedDivisor {
  Divisor values;
  Vertex base = 0;
  FiringVector firing;
};

/// Unique q-reduced divisor equivalent to `f`, by Dhar's burning algorithm.
ReducedDivisor q_reduce(const Multigraph& g, const Divisor& f, Vertex q);

/// Linearly equivalent to an effective divisor.
bool is_l_effective(const Multigraph& g, const Divisor& f);

/// Effective divisors of degree `d` on `n` vertices in decreasing
/// lexicographic order, (d, 0, ..., 0) first. `visit` returns false to stop.
void for_each_effective(std::size_t n, std::int64_t d,
                        const std::function<bool(const Divisor&)>& visit);

std::vector<Divisor> enumerate_effective(std::size_t n, std::int64_t d);

struct OracleLimits {
  std::size_t max_vertices = 12;
  /// Refuse divisors whose rank could exceed this (rank <= degree).
  std::int64_t max_rank = 64;
};

/// Brute-force rank with a memo shared across queries on one graph.
///
/// Uses rank(f) = -1 when f is not L-effective and otherwise
/// 1 + min over v of rank(f - e_v), which unrolls the quantifier over every
/// effective divisor of each degree. Each class is keyed by its reduced form
/// at vertex 0, so the work is bounded by the number of classes visited.
class RankOracle {
 public:
  /// Throws OracleGuardError when the graph exceeds `limits.max_vertices`.
  explicit RankOracle(const Multigraph& g, OracleLimits limits = {});

  /// Throws OracleGuardError when deg(f) exceeds `limits.max_rank`.
  std::int64_t rank(const Divisor& f);

  std::size_t classes_seen() const noexcept { return memo_.size(); }

 private:
  std::int64_t rank_of_reduced(const Divisor& reduced);

  const Multigraph& graph_;
  OracleLimits limits_;
  std::map<std::vector<std::int64_t>, std::int64_t> memo_;
};

std::int64_t oracle_rank(const Multigraph& g, const Divisor& f,
                         const OracleLimits& limits = {});

/// The definition taken literally: r = 0, 1, ... and every effective divisor
/// of degree r in lexicographic order, stopping at the first failure.
/// Exponential; for cross-checking RankOracle on tiny inputs.
std::int64_t oracle_rank_by_enumeration(const Multigraph& g, const Divisor& f,
                                        const OracleLimits& limits = {});

struct RiemannRochCheck {
  bool holds = false;
  /// rank(f) - rank(K - f)
  std::int64_t lhs = 0;
  /// deg(f) - genus + 1
  std::int64_t rhs = 0;
};

using RankFunction = std::function<std::int64_t(const Multigraph&, const Divisor&)>;

RiemannRochCheck rr_check(const Multigraph& g, const Divisor& f,
                          const RankFunction& rank_fn);

}  // namespace cactusrank
