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

#include "cactusrank/graph.hpp"
#include "cactusrank/problem_io.hpp"

namespace cactusrank {

/// SplitMix64. Fixed here rather than taken from <random> so that a seed
/// produces the same bytes on every standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct GeneratorParams {
  std::size_t vertices = 1;
  /// Number of cycle blocks, which is also the genus.
  std::size_t cycles = 0;
  std::size_t max_cycle_len = 6;
  std::int64_t divisor_degree = 0;
  std::uint64_t seed = 0;
};

/// Random connected cactus with exactly `vertices` vertices and `cycles`
/// cycle blocks. Throws std::invalid_argument when that is impossible
/// (vertices == 0, cycles >= vertices, max_cycle_len < 2).
///
/// Cycle lengths are drawn in [2, max_cycle_len] from the vertex budget, the
/// rest of the budget becomes bridges; the blocks are shuffled and each is
/// glued to a uniformly chosen existing vertex. Vertex ids, edge order and
/// edge orientation are then shuffled.
Multigraph generate_cactus(const GeneratorParams& params);

/// generate_cactus() plus a divisor of degree `divisor_degree`: entries
/// drawn in [-2, 2], then shifted evenly to hit the target degree.
ProblemFile generate_problem(const GeneratorParams& params);

}  // namespace cactusrank
