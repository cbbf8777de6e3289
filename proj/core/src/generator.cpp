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

#include "cactusrank/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cactusrank {
namespace {

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

Multigraph build(const GeneratorParams& p, SplitMix64& rng) {
  if (p.vertices == 0) throw std::invalid_argument("need at least one vertex");
  if (p.max_cycle_len < 2) throw std::invalid_argument("max_cycle_len must be >= 2");
  if (p.cycles > p.vertices - 1) {
    throw std::invalid_argument("cannot fit " + std::to_string(p.cycles) +
                                " cycles on " + std::to_string(p.vertices) +
                                " vertices");
  }
  if (p.vertices >= std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("too many vertices");
  }

  // Block lengths in vertices; 1 marks a bridge.
  std::size_t budget = p.vertices - 1 - p.cycles;
  std::vector<std::size_t> blocks;
  blocks.reserve(p.vertices);
  for (std::size_t c = 0; c < p.cycles; ++c) {
    const std::size_t extra =
        std::min<std::size_t>(rng.below(p.max_cycle_len - 1), budget);
    budget -= extra;
    blocks.push_back(2 + extra);
  }
  blocks.insert(blocks.end(), budget, 1);
  shuffle(blocks, rng);

  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : blocks) {
    const Vertex attach = static_cast<Vertex>(rng.below(next));
    if (len == 1) {
      edges.push_back({attach, next++});
      continue;
    }
    Vertex prev = attach;
    for (std::size_t i = 1; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, attach});
  }

  std::vector<Vertex> label(p.vertices);
  std::iota(label.begin(), label.end(), Vertex{0});
  shuffle(label, rng);
  for (Edge& e : edges) {
    e = {label[e.u], label[e.v]};
    if (rng.below(2)) std::swap(e.u, e.v);
  }
  shuffle(edges, rng);
  return Multigraph(p.vertices, std::move(edges));
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(next());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

Multigraph generate_cactus(const GeneratorParams& params) {
  SplitMix64 rng(params.seed);
  return build(params, rng);
}

ProblemFile generate_problem(const GeneratorParams& params) {
  SplitMix64 rng(params.seed);
  Multigraph g = build(params, rng);

  const auto n = static_cast<std::int64_t>(g.num_vertices());
  Divisor f(g.num_vertices());
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    f[v] = rng.between(-2, 2);
    sum += f[v];
  }
  const std::int64_t diff = params.divisor_degree - sum;
  const std::int64_t each = diff / n;
  std::int64_t rest = diff - each * n;
  const auto start = static_cast<std::size_t>(rng.below(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t step = each;
    if (rest > 0) {
      ++step;
      --rest;
    } else if (rest < 0) {
      --step;
      ++rest;
    }
    f[(start + i) % f.size()] += step;
  }
  return {std::move(g), std::move(f)};
}

}  // namespace cactusrank
