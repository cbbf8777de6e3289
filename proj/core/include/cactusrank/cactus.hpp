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
#include <map>
#include <optional>
#include <vector>

#include "cactusrank/graph.hpp"

namespace cactusrank {

enum class BlockKind { kEdge, kCycle };

/// A bridge or a simple cycle. Cycle vertices are listed in order along the
/// cycle; a doubled edge is a cycle of length 2. Blocks produced by
/// block_decomposition() list first the vertex through which they hang
/// towards the DFS root.
struct Block {
  BlockKind kind = BlockKind::kEdge;
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  /// Vertices lying in two or more blocks, ascending.
  std::vector<Vertex> cut_vertices;
  /// block_of_edge[i] is the index of the block holding g.edges()[i].
  std::vector<std::size_t> block_of_edge;
};

struct EliminationStep {
  Block block;
  /// Vertex the block is contracted into.
  Vertex attach = 0;

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

/// Ordered contractions reducing a cactus to the single vertex `root`.
struct BlockEliminationScheme {
  std::vector<EliminationStep> steps;
  Vertex root = 0;
};

/// Rooted tree over the attach vertices of a scheme. Every attach vertex
/// other than the root maps to the attach vertex of the step that removes it.
struct BESTree {
  Vertex root = 0;
  std::map<Vertex, Vertex> parent;
};

/// Biconnected components of a connected cactus. Throws NotCactusError
/// naming an edge of the first block that is neither a bridge nor a cycle,
/// and InvalidGraphError on a disconnected graph.
BlockDecomposition block_decomposition(const Multigraph& g);

/// O(n + m). Throws InvalidGraphError on a disconnected graph.
bool is_cactus(const Multigraph& g);

/// An edge certifying that `g` is not a cactus, if any.
std::optional<Edge> non_cactus_witness(const Multigraph& g);

/// Leaf-first elimination scheme from a depth-first search rooted at `root`.
/// Blocks are eliminated in the order the search closes them, so every block
/// is free when its turn comes. O(n + m).
BlockEliminationScheme build_bes(const Multigraph& g, Vertex root = 0);

/// Throws InvalidSchemeError when the steps cannot describe an elimination.
BESTree bes_tree(const BlockEliminationScheme& scheme);

/// Replays `scheme` on `g`: every block must be free in the current graph at
/// its turn, and the replay must end at the lone vertex `scheme.root`.
bool validate_bes(const Multigraph& g, const BlockEliminationScheme& scheme);

/// Whether `block` is a block of `g` hanging only from `attach`, i.e. all of
/// its other vertices have every incident edge inside the block.
bool is_free_block(const Multigraph& g, const Block& block, Vertex attach);

}  // namespace cactusrank
