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

#include "cactusrank/cactus.hpp"
#include "cactusrank/errors.hpp"
#include "cactusrank/generator.hpp"
#include "cactusrank/oracle.hpp"
#include "cactusrank/rank.hpp"
#include "test_support.hpp"

namespace cactusrank {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;

Multigraph two_triangles() {
  return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

std::int64_t slow_rank(const Multigraph& g, const Divisor& f) {
  return rank(g, f, RankOptions{false, false}).rank;
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Multigraph(1, {}), Divisor{3}).rank, 3);
  EXPECT_EQ(rank(Multigraph(1, {}), Divisor{-2}).rank, -1);
  EXPECT_EQ(rank(path_graph(3), Divisor{1, 0, 2}).rank, 3);
  EXPECT_EQ(slow_rank(cycle_graph(3), Divisor{1, -2, 1}), 0);
  EXPECT_EQ(slow_rank(cycle_graph(3), Divisor{1, -1, 0}), -1);
  EXPECT_EQ(slow_rank(two_triangles(), index_divisor(5, 0)), 0);
  EXPECT_EQ(slow_rank(Multigraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), Divisor(4)), 0);
}

// A bad cycle before a good one drives the working degree negative; the
// answer is still -1 and the good cycle must not add to it.
TEST(Rank, FloorBelowGoodCycle) {
  const Multigraph g = two_triangles();
  EXPECT_EQ(slow_rank(g, Divisor{0, 1, -1, 0, 0}), -1);
  EXPECT_EQ(oracle_rank(g, Divisor{0, 1, -1, 0, 0}), -1);
}

TEST(Rank, TraceFollowsTheReduction) {
  const RankResult r = rank(two_triangles(), Divisor{0, 1, -1, 0, 1}, RankOptions{true, true});
  EXPECT_EQ(r.rank, -1);
  ASSERT_EQ(r.trace.size(), 2u);
  std::size_t bad = 0;
  for (const RankStep& s : r.trace) {
    EXPECT_EQ(s.kind, BlockKind::kCycle);
    EXPECT_EQ(s.charge, s.goodness == Goodness::kBad ? 1 : 0);
    bad += static_cast<std::size_t>(s.charge);
  }
  EXPECT_EQ(bad, 2u);
  EXPECT_EQ(r.trace.back().degree, -1);
}

// Gluing a good cycle at v adds one to the rank of f - 2v on the rest only
// when both chips at v matter; here f ~ 2 * vertex 0 on the square with a
// doubled edge at 3, where removing them loses nothing.
TEST(Rank, GoodCycleOverDoubleBasePoint) {
  const Multigraph g(6, {{1, 5}, {2, 0}, {3, 0}, {2, 0}, {4, 3}, {4, 3}, {5, 0}, {1, 3}});
  const Divisor f{1, 1, 0, 1, 0, -1};
  EXPECT_EQ(oracle_rank(g, f), 0);
  EXPECT_EQ(slow_rank(g, f), 0);
  const Multigraph rest(5, {{1, 4}, {2, 0}, {2, 3}, {2, 3}, {4, 0}, {1, 2}});
  EXPECT_EQ(oracle_rank(rest, Divisor{2, 0, 0, 0, 0}), 0);
  EXPECT_EQ(oracle_rank(rest, Divisor{0, 0, 0, 0, 0}), 0);
}

TEST(Rank, TraceRecordsEveryBlock) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const RankResult r = rank(g, Divisor{1, 1, 0, 1}, RankOptions{true, true});
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].kind, BlockKind::kEdge);
  EXPECT_FALSE(r.trace[0].goodness.has_value());
  EXPECT_EQ(r.trace[0].charge, 0);
  EXPECT_EQ(r.trace[0].degree, 3);
  EXPECT_EQ(r.rank, oracle_rank(g, Divisor{1, 1, 0, 1}));
  EXPECT_TRUE(rank(g, Divisor{1, 1, 0, 1}).trace.empty());
}

TEST(Rank, Errors) {
  EXPECT_THROW(rank(complete_graph(4), Divisor(4)), NotCactusError);
  EXPECT_THROW(rank(Multigraph(3, {{0, 1}}), Divisor(3)), InvalidGraphError);
  EXPECT_THROW(rank(cycle_graph(3), Divisor(2)), std::invalid_argument);
  BlockEliminationScheme bogus = build_bes(path_graph(3));
  std::swap(bogus.steps[0], bogus.steps[1]);
  EXPECT_THROW(rank(path_graph(3), Divisor(3), bogus), InvalidSchemeError);
}

TEST(RankFastPath, Examples) {
  EXPECT_EQ(rank_fast_path(cycle_graph(4), Divisor{5, 0, 0, 0}), 4);
  EXPECT_EQ(rank_fast_path(cycle_graph(4), Divisor{-7, 0, 0, 0}), -1);
  EXPECT_EQ(rank_fast_path(two_triangles(), Divisor{1, 1, 0, 0, 0}), std::nullopt);
  EXPECT_EQ(rank_fast_path(two_triangles(), Divisor{0, 0, 0, 0, 0}), std::nullopt);
  EXPECT_EQ(rank_fast_path(path_graph(3), Divisor{0, 0, 0}), 0);
}

class RankAgainstOracle : public ::testing::TestWithParam<std::uint64_t> {};

// Degrees are drawn around the genus so that the elimination, not the
// degree shortcut, decides the answer.
TEST_P(RankAgainstOracle, RandomCacti) {
  SplitMix64 rng(GetParam());
  for (int i = 0; i < 150; ++i) {
    GeneratorParams p{1 + rng.below(11), 0, 2 + rng.below(5), 0, rng.next()};
    p.cycles = rng.below(std::min<std::size_t>(4, p.vertices - 1) + 1);
    const Multigraph g = generate_cactus(p);
    RankOracle oracle(g);
    for (int k = 0; k < 6; ++k) {
      const std::int64_t d = rng.between(-1, 2 * static_cast<std::int64_t>(p.cycles));
      const Divisor f = testing::random_divisor_of_degree(rng, g.num_vertices(), d);
      const std::int64_t expected = oracle.rank(f);
      EXPECT_EQ(slow_rank(g, f), expected) << "seed " << p.seed;
      EXPECT_EQ(rank(g, f).rank, expected) << "seed " << p.seed;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RankAgainstOracle, ::testing::Values(1, 2, 3, 4));

TEST(Rank, IndependentOfScheme) {
  SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    GeneratorParams p{2 + rng.below(25), 0, 5, 0, rng.next()};
    p.cycles = rng.below(p.vertices);
    const Multigraph g = generate_cactus(p);
    const Divisor f = testing::random_divisor_of_degree(
        rng, g.num_vertices(), rng.between(0, 2 * static_cast<std::int64_t>(p.cycles)));
    const std::int64_t base = slow_rank(g, f);
    for (int k = 0; k < 4; ++k) {
      const auto scheme = build_bes(g, static_cast<Vertex>(rng.below(g.num_vertices())));
      EXPECT_EQ(rank(g, f, scheme, RankOptions{false, false}).rank, base);
    }
  }
}

TEST(Rank, InvariantUnderLinearEquivalence) {
  SplitMix64 rng(23);
  for (int i = 0; i < 100; ++i) {
    GeneratorParams p{2 + rng.below(25), 0, 5, 0, rng.next()};
    p.cycles = rng.below(p.vertices);
    const Multigraph g = generate_cactus(p);
    const std::size_t n = g.num_vertices();
    const Divisor f = testing::random_divisor_of_degree(
        rng, n, rng.between(-1, 2 * static_cast<std::int64_t>(p.cycles)));
    FiringVector x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = rng.between(-2, 2);
    EXPECT_EQ(slow_rank(g, apply_firing(g, f, x)), slow_rank(g, f));
  }
}

TEST(Rank, LargeCactus) {
  GeneratorParams p{200000, 60000, 8, 0, 5};
  p.divisor_degree = 60000;
  const ProblemFile prob = generate_problem(p);
  const RankResult r = rank(prob.graph, prob.divisor, RankOptions{false, false});
  EXPECT_GE(r.rank, -1);
  EXPECT_LE(r.rank, 60000);
}

}  // namespace
}  // namespace cactusrank
