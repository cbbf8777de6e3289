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

#include <cstdint>
#include <span>
#include <vector>

#include "cactusrank/cactus.hpp"
#include "cactusrank/graph.hpp"

namespace cactusrank {

/// Divisor on a cycle, written (f_1, ..., f_n) along the cycle order.
class CycleDivisor {
 public:
  /// Throws std::invalid_argument when fewer than two entries are given.
  explicit CycleDivisor(std::vector<std::int64_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::int64_t degree() const;

 private:
  std::vector<std::int64_t> values_;
};

/// Classification of a degree-0 cycle divisor: good when linearly
/// equivalent to zero.
enum class Goodness { kGood, kBad };

/// Good iff f_1 + 2 f_2 + ... + (n-1) f_{n-1} = 0 (mod n). Throws
/// std::invalid_argument when the degree is not zero.
Goodness cycle_goodness(const CycleDivisor& f);

/// Rank of a divisor on a lone cycle.
std::int64_t cycle_rank(const CycleDivisor& f);

/// Rank of a divisor on a tree: its degree, or -1 when that is negative.
/// Throws std::invalid_argument when `g` is not a tree.
std::int64_t tree_rank(const Multigraph& g, const Divisor& f);

/// Goodness of the zero part of `values` on a cycle block whose attach
/// vertex is `cycle.vertices[attach_index]`. `values` is indexed by vertex
/// id. The attach vertex sits at position n of the cycle, the others at
/// 1..n-1 in cycle order, so its own value never matters. O(|cycle|).
Goodness zero_part_goodness(const Block& cycle, std::size_t attach_index,
                            std::span<const std::int64_t> values);

/// G/H: the graph left after collapsing a free block into its attach
/// vertex, relabelled densely in increasing order of original id.
struct Contraction {
  Multigraph graph;
  Divisor divisor;
  /// original_id[new id] = id in the uncontracted graph.
  std::vector<Vertex> original_id;
};

/// Throws std::invalid_argument unless `block` is free at `attach`.
Contraction contract(const Multigraph& g, const Divisor& f, const Block& block,
                     Vertex attach);

/// The divisor part of contract(): the attach vertex receives the sum of f
/// over the whole block.
Divisor contract_divisor(const Multigraph& g, const Divisor& f,
                         const Block& block, Vertex attach);

/// Zero part of f on a free block, listed in block vertex order: f off the
/// attach vertex, minus their sum at the attach vertex. Degree 0.
Divisor zero_part(const Multigraph& g, const Divisor& f, const Block& block,
                  Vertex attach);

}  // namespace cactusrank
