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

#include "cactusrank/block_rank.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cactusrank {
namespace {

std::uint64_t mod(std::int64_t x, std::uint64_t n) {
  const std::int64_t r = x % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

void require_free(const Multigraph& g, const Divisor& f, const Block& block,
                  Vertex attach) {
  if (f.size() != g.num_vertices()) {
    throw std::invalid_argument("divisor length does not match the graph");
  }
  if (!is_free_block(g, block, attach)) {
    throw std::invalid_argument("block is not free at vertex " +
                                std::to_string(attach));
  }
}

}  // namespace

CycleDivisor::CycleDivisor(std::vector<std::int64_t> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("a cycle has at least two vertices");
  }
}

std::int64_t CycleDivisor::degree() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

Goodness cycle_goodness(const CycleDivisor& f) {
  if (f.degree() != 0) {
    throw std::invalid_argument("goodness is only defined for degree 0");
  }
  // Terms are reduced first; i, f_i mod n < 2^32 keeps every product in range.
  const std::uint64_t n = f.size();
  std::uint64_t acc = 0;
  for (std::uint64_t i = 1; i < n; ++i) acc = (acc + (i * mod(f[i - 1], n)) % n) % n;
  return acc == 0 ? Goodness::kGood : Goodness::kBad;
}

std::int64_t cycle_rank(const CycleDivisor& f) {
  const std::int64_t d = f.degree();
  if (d < 0) return -1;
  if (d == 0) return cycle_goodness(f) == Goodness::kGood ? 0 : -1;
  return d - 1;
}

std::int64_t tree_rank(const Multigraph& g, const Divisor& f) {
  if (!g.connected() || g.num_edges() + 1 != g.num_vertices()) {
    throw std::invalid_argument("graph is not a tree");
  }
  if (f.size() != g.num_vertices()) {
    throw std::invalid_argument("divisor length does not match the graph");
  }
  const std::int64_t d = degree(f);
  return d >= 0 ? d : -1;
}

Goodness zero_part_goodness(const Block& cycle, std::size_t attach_index,
                            std::span<const std::int64_t> values) {
  const std::uint64_t n = cycle.size();
  std::uint64_t acc = 0;
  for (std::uint64_t pos = 1; pos < n; ++pos) {
    const Vertex u = cycle.vertices[(attach_index + pos) % n];
    acc = (acc + (pos * mod(values[u], n)) % n) % n;
  }
  return acc == 0 ? Goodness::kGood : Goodness::kBad;
}

Contraction contract(const Multigraph& g, const Divisor& f, const Block& block,
                     Vertex attach) {
  require_free(g, f, block, attach);
  const std::size_t n = g.num_vertices();

  std::vector<char> dropped(n, 0);
  std::int64_t block_sum = 0;
  for (Vertex v : block.vertices) {
    block_sum += f[v];
    if (v != attach) dropped[v] = 1;
  }

  Contraction out;
  std::vector<Vertex> new_id(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (dropped[v]) continue;
    new_id[v] = static_cast<Vertex>(out.original_id.size());
    out.original_id.push_back(v);
  }

  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (!dropped[e.u] && !dropped[e.v]) edges.push_back({new_id[e.u], new_id[e.v]});
  }
  out.graph = Multigraph(out.original_id.size(), std::move(edges));

  out.divisor = Divisor(out.original_id.size());
  for (std::size_t i = 0; i < out.original_id.size(); ++i) {
    out.divisor[i] = f[out.original_id[i]];
  }
  out.divisor[new_id[attach]] = block_sum;
  return out;
}

Divisor contract_divisor(const Multigraph& g, const Divisor& f,
                         const Block& block, Vertex attach) {
  return contract(g, f, block, attach).divisor;
}

Divisor zero_part(const Multigraph& g, const Divisor& f, const Block& block,
                  Vertex attach) {
  require_free(g, f, block, attach);
  Divisor out(block.size());
  std::int64_t rest = 0;
  std::size_t attach_index = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const Vertex v = block.vertices[i];
    if (v == attach) {
      attach_index = i;
      continue;
    }
    out[i] = f[v];
    rest += f[v];
  }
  out[attach_index] = -rest;
  return out;
}

}  // namespace cactusrank
