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

#include <gtest/gtest.h>

#include <algorithm>

#include "cactusrank/cactus.hpp"
#include "cactusrank/errors.hpp"
#include "cactusrank/generator.hpp"
#include "test_support.hpp"

namespace cactusrank {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;

Multigraph triangle_with_pendant() {
  return Multigraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

Multigraph two_triangles() {
  return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

std::size_t count_kind(const std::vector<Block>& blocks, BlockKind kind) {
  return static_cast<std::size_t>(std::count_if(
      blocks.begin(), blocks.end(), [&](const Block& b) { return b.kind == kind; }));
}

// Consecutive cycle vertices must be adjacent, with multiplicity 2 for a
// 2-cycle.
void expect_well_formed(const Multigraph& g, const Block& b) {
  if (b.kind == BlockKind::kEdge) {
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(g.multiplicity(b.vertices[0], b.vertices[1]), 1u);
    return;
  }
  ASSERT_GE(b.size(), 2u);
  if (b.size() == 2) {
    EXPECT_EQ(g.multiplicity(b.vertices[0], b.vertices[1]), 2u);
    return;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_EQ(g.multiplicity(b.vertices[i], b.vertices[(i + 1) % b.size()]), 1u);
  }
}

TEST(BlockDecomposition, SingleCycle) {
  const auto d = block_decomposition(cycle_graph(5));
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].kind, BlockKind::kCycle);
  EXPECT_EQ(d.blocks[0].size(), 5u);
  EXPECT_TRUE(d.cut_vertices.empty());
  expect_well_formed(cycle_graph(5), d.blocks[0]);
}

TEST(BlockDecomposition, Path) {
  const auto d = block_decomposition(path_graph(3));
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(count_kind(d.blocks, BlockKind::kEdge), 2u);
  EXPECT_EQ(d.cut_vertices, std::vector<Vertex>{1});
}

TEST(BlockDecomposition, TriangleWithPendant) {
  const Multigraph g = triangle_with_pendant();
  const auto d = block_decomposition(g);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.cut_vertices, std::vector<Vertex>{2});
  EXPECT_EQ(count_kind(d.blocks, BlockKind::kCycle), 1u);
  for (const Block& b : d.blocks) {
    expect_well_formed(g, b);
    std::vector<Vertex> sorted = b.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (b.kind == BlockKind::kCycle) {
      EXPECT_EQ(sorted, (std::vector<Vertex>{0, 1, 2}));
    } else {
      EXPECT_EQ(sorted, (std::vector<Vertex>{2, 3}));
    }
  }
  // Edges 0..2 are the triangle, edge 3 the pendant.
  ASSERT_EQ(d.block_of_edge.size(), 4u);
  EXPECT_EQ(d.block_of_edge[0], d.block_of_edge[1]);
  EXPECT_EQ(d.block_of_edge[1], d.block_of_edge[2]);
  EXPECT_NE(d.block_of_edge[2], d.block_of_edge[3]);
}

TEST(BlockDecomposition, DoubledEdgeIsTwoCycle) {
  const Multigraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  const auto d = block_decomposition(g);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(count_kind(d.blocks, BlockKind::kCycle), 1u);
  for (const Block& b : d.blocks) expect_well_formed(g, b);
}

TEST(BlockDecomposition, RejectsDisconnected) {
  EXPECT_THROW(block_decomposition(Multigraph(4, {{0, 1}, {2, 3}})), InvalidGraphError);
  EXPECT_THROW(is_cactus(Multigraph(3, {{0, 1}})), InvalidGraphError);
}

TEST(BlockDecomposition, NamesOffendingEdge) {
  try {
    block_decomposition(complete_graph(4));
    FAIL() << "K4 accepted";
  } catch (const NotCactusError& e) {
    EXPECT_LT(e.u(), 4u);
    EXPECT_LT(e.v(), 4u);
    EXPECT_NE(std::string(e.what()).find("not a cactus"), std::string::npos);
  }
}

TEST(IsCactus, Examples) {
  EXPECT_TRUE(is_cactus(cycle_graph(4)));
  EXPECT_TRUE(is_cactus(Multigraph(1, {})));
  EXPECT_TRUE(is_cactus(two_triangles()));
  EXPECT_FALSE(is_cactus(complete_graph(4)));
  EXPECT_FALSE(is_cactus(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})));
  // Two cycles sharing two vertices: a theta graph.
  EXPECT_FALSE(is_cactus(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  // A doubled edge inside a longer cycle shares an edge with it.
  EXPECT_FALSE(is_cactus(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}})));
  EXPECT_TRUE(non_cactus_witness(complete_graph(4)).has_value());
  EXPECT_FALSE(non_cactus_witness(cycle_graph(6)).has_value());
}

TEST(BuildBes, SingleVertex) {
  const auto s = build_bes(Multigraph(1, {}));
  EXPECT_TRUE(s.steps.empty());
  EXPECT_EQ(s.root, 0u);
  EXPECT_TRUE(validate_bes(Multigraph(1, {}), s));
}

TEST(BuildBes, TriangleWithPendant) {
  const Multigraph g = triangle_with_pendant();
  const auto s = build_bes(g);
  ASSERT_EQ(s.steps.size(), 2u);
  EXPECT_EQ(s.steps[0], (EliminationStep{Block{BlockKind::kEdge, {2, 3}}, 2}));
  EXPECT_EQ(s.steps[1], (EliminationStep{Block{BlockKind::kCycle, {0, 1, 2}}, 0}));
  EXPECT_EQ(s.root, 0u);
  EXPECT_TRUE(validate_bes(g, s));
}

TEST(BuildBes, TwoTrianglesAttachAtSharedVertex) {
  const Multigraph g = two_triangles();
  const auto s = build_bes(g);
  ASSERT_EQ(s.steps.size(), 2u);
  for (const auto& step : s.steps) {
    EXPECT_EQ(step.attach, 0u);
    EXPECT_EQ(step.block.kind, BlockKind::kCycle);
  }
  EXPECT_TRUE(validate_bes(g, s));
}

TEST(BuildBes, AnyRoot) {
  const Multigraph g = two_triangles();
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    const auto s = build_bes(g, r);
    EXPECT_EQ(s.root, r);
    EXPECT_TRUE(validate_bes(g, s));
  }
}

TEST(BuildBes, RejectsNonCactus) {
  EXPECT_THROW(build_bes(complete_graph(4)), NotCactusError);
}

TEST(BuildBes, RandomCactiAreValid) {
  SplitMix64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    GeneratorParams p{1 + rng.below(40), 0, 2 + rng.below(7), 0, rng.next()};
    p.cycles = rng.below(p.vertices);
    const Multigraph g = generate_cactus(p);
    const auto d = block_decomposition(g);
    const auto s = build_bes(g);
    EXPECT_TRUE(validate_bes(g, s)) << "seed " << p.seed;
    EXPECT_EQ(s.steps.size(), d.blocks.size());
    EXPECT_EQ(count_kind(d.blocks, BlockKind::kCycle), static_cast<std::size_t>(genus(g)));
    for (const Block& b : d.blocks) expect_well_formed(g, b);
  }
}

TEST(ValidateBes, RejectsNonFreeFirstBlock) {
  // Chain 0-1-2-3: eliminating the middle edge first is not allowed.
  const Multigraph g = path_graph(4);
  BlockEliminationScheme good = build_bes(g);
  ASSERT_TRUE(validate_bes(g, good));
  BlockEliminationScheme bad = good;
  std::swap(bad.steps[0], bad.steps[1]);
  EXPECT_FALSE(validate_bes(g, bad));
}

TEST(ValidateBes, ReversedChainIsValid) {
  // Chain of blocks: triangle - edge - square. Eliminating from the other
  // end towards a root in the triangle is the mirror scheme.
  const Multigraph g(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  const auto forward = build_bes(g, 0);
  const auto backward = build_bes(g, 5);
  EXPECT_TRUE(validate_bes(g, forward));
  EXPECT_TRUE(validate_bes(g, backward));
  ASSERT_EQ(forward.steps.size(), 3u);
  ASSERT_EQ(backward.steps.size(), 3u);
  EXPECT_EQ(forward.steps.front().block.kind, BlockKind::kCycle);
  EXPECT_EQ(backward.steps.front().block.kind, BlockKind::kCycle);
  EXPECT_NE(forward.steps.front().block.size(), backward.steps.front().block.size());
}

TEST(ValidateBes, RejectsIncompleteOrForeignSchemes) {
  const Multigraph g = triangle_with_pendant();
  BlockEliminationScheme s = build_bes(g);
  s.steps.pop_back();
  EXPECT_FALSE(validate_bes(g, s));
  s = build_bes(g);
  s.root = 3;
  EXPECT_FALSE(validate_bes(g, s));
  s = build_bes(g);
  s.steps[1].attach = 3;
  EXPECT_FALSE(validate_bes(g, s));
  // No scheme at all can reduce a non-cactus.
  EXPECT_FALSE(validate_bes(complete_graph(4), BlockEliminationScheme{}));
  const BlockEliminationScheme triangles{
      {{Block{BlockKind::kCycle, {1, 2, 3}}, 1}, {Block{BlockKind::kCycle, {0, 1, 2}}, 0}}, 0};
  EXPECT_FALSE(validate_bes(complete_graph(4), triangles));
}

TEST(BesTree, Shapes) {
  EXPECT_TRUE(bes_tree(BlockEliminationScheme{}).parent.empty());

  const auto chain = bes_tree(build_bes(path_graph(4), 0));
  EXPECT_EQ(chain.root, 0u);
  EXPECT_EQ(chain.parent, (std::map<Vertex, Vertex>{{1, 0}, {2, 1}}));

  // Star with centre 0: every step attaches at the root.
  const Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = build_bes(star, 0);
  for (const auto& step : s.steps) EXPECT_EQ(step.attach, 0u);
  const auto t = bes_tree(s);
  EXPECT_EQ(t.root, 0u);
  EXPECT_TRUE(t.parent.empty());
}

TEST(BesTree, RejectsInvalidScheme) {
  const BlockEliminationScheme s{{{Block{BlockKind::kEdge, {0, 1}}, 2}}, 0};
  EXPECT_THROW(bes_tree(s), InvalidSchemeError);
  const BlockEliminationScheme twice{
      {{Block{BlockKind::kEdge, {0, 1}}, 0}, {Block{BlockKind::kEdge, {1, 2}}, 2}}, 2};
  EXPECT_THROW(bes_tree(twice), InvalidSchemeError);
}

TEST(IsFreeBlock, Basics) {
  const Multigraph g = triangle_with_pendant();
  EXPECT_TRUE(is_free_block(g, Block{BlockKind::kEdge, {2, 3}}, 2));
  EXPECT_FALSE(is_free_block(g, Block{BlockKind::kEdge, {2, 3}}, 3));
  EXPECT_FALSE(is_free_block(g, Block{BlockKind::kCycle, {0, 1, 2}}, 0));
  EXPECT_TRUE(is_free_block(g, Block{BlockKind::kCycle, {0, 1, 2}}, 2));
}

}  // namespace
}  // namespace cactusrank
