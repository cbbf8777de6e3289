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

#include "cactusrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cactusrank/errors.hpp"

namespace cactusrank {

std::int64_t degree(const Divisor& f) {
  return std::accumulate(f.begin(), f.end(), std::int64_t{0});
}

bool is_effective(const Divisor& f) {
  return std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x >= 0; });
}

Divisor index_divisor(std::size_t n, Vertex v) {
  if (v >= n) throw std::out_of_range("vertex id out of range");
  Divisor e(n);
  e[v] = 1;
  return e;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("vector length mismatch: " +
                                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
  require_same_size(a.size(), b.size());
  Divisor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  require_same_size(a.size(), b.size());
  Divisor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges)
    : edges_(std::move(edges)), offsets_(n + 1, 0), degree_(n, 0) {
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw InvalidGraphError("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) +
                              ") references a vertex outside 0.." +
                              std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw InvalidGraphError("loop at vertex " + std::to_string(e.u));
    }
    ++degree_[e.u];
    ++degree_[e.v];
  }

  // Bucket every edge end by its source, then collapse repeated neighbours.
  std::vector<std::size_t> fill(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) fill[v + 1] = fill[v] + degree_[v];
  std::vector<Vertex> ends(fill[n]);
  {
    std::vector<std::size_t> cursor(fill.begin(), fill.end() - 1);
    for (const Edge& e : edges_) {
      ends[cursor[e.u]++] = e.v;
      ends[cursor[e.v]++] = e.u;
    }
  }

  adjacency_.reserve(ends.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = ends.begin() + static_cast<std::ptrdiff_t>(fill[v]);
    auto last = ends.begin() + static_cast<std::ptrdiff_t>(fill[v + 1]);
    std::sort(first, last);
    offsets_[v] = adjacency_.size();
    for (auto it = first; it != last;) {
      auto run = std::find_if(it, last, [&](Vertex w) { return w != *it; });
      adjacency_.push_back(
          {*it, static_cast<std::uint32_t>(std::distance(it, run))});
      it = run;
    }
  }
  offsets_[n] = adjacency_.size();
  adjacency_.shrink_to_fit();

  if (n == 0) return;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Neighbor& nb : neighbors(queue[head])) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  connected_ = queue.size() == n;
}

std::uint32_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return 0;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), v,
      [](const Neighbor& a, Vertex key) { return a.vertex < key; });
  return it != nbrs.end() && it->vertex == v ? it->multiplicity : 0;
}

void Multigraph::require_connected() const {
  if (num_vertices() == 0) throw InvalidGraphError("graph has no vertices");
  if (!connected_) throw InvalidGraphError("graph is not connected");
}

std::int64_t genus(const Multigraph& g) {
  g.require_connected();
  return static_cast<std::int64_t>(g.num_edges()) -
         static_cast<std::int64_t>(g.num_vertices()) + 1;
}

std::vector<std::int64_t> laplacian_row(const Multigraph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
  std::vector<std::int64_t> row(g.num_vertices(), 0);
  row[v] = g.degree(v);
  for (const auto& nb : g.neighbors(v)) row[nb.vertex] = -std::int64_t{nb.multiplicity};
  return row;
}

Divisor apply_firing(const Multigraph& g, const Divisor& f,
                     const FiringVector& x) {
  require_same_size(f.size(), g.num_vertices());
  require_same_size(x.size(), g.num_vertices());
  // (x * L)(u) = x_u deg(u) - sum_v x_v e(u, v); L is symmetric.
  Divisor out = f;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    std::int64_t acc = x[u] * std::int64_t{g.degree(u)};
    for (const auto& nb : g.neighbors(u)) acc -= x[nb.vertex] * std::int64_t{nb.multiplicity};
    out[u] += acc;
  }
  return out;
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) k[v] = std::int64_t{g.degree(v)} - 2;
  return k;
}

}  // namespace cactusrank
