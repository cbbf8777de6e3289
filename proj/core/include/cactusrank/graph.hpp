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
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cactusrank {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Integer vector indexed by vertex id. `Tag` keeps divisors and firing
/// vectors from being mixed up.
template <class Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::size_t n) : values_(n, 0) {}
  explicit VertexVector(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}
  VertexVector(std::initializer_list<std::int64_t> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t v) const { return values_[v]; }
  std::int64_t& operator[](std::size_t v) { return values_[v]; }

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::span<std::int64_t> values() noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const VertexVector&, const VertexVector&) = default;

 private:
  std::vector<std::int64_t> values_;
};

struct DivisorTag {};
struct FiringTag {};

/// Chip configuration: one integer per vertex.
using Divisor = VertexVector<DivisorTag>;

/// Firing vector `x` in `f + x * Laplacian`. A positive entry at v makes v
/// gain deg(v) chips and each neighbour u lose e(u, v).
using FiringVector = VertexVector<FiringTag>;

std::int64_t degree(const Divisor& f);
bool is_effective(const Divisor& f);

/// The divisor with a single chip at `v`.
Divisor index_divisor(std::size_t n, Vertex v);

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);

/// Loop-free undirected multigraph on vertices 0..n-1.
///
/// Parallel edges are kept once in the adjacency with a multiplicity; the
/// original edge list (repetitions included) is preserved in input order so
/// that a graph can be written back out unchanged. Immutable once built.
class Multigraph {
 public:
  struct Neighbor {
    Vertex vertex;
    std::uint32_t multiplicity;
  };

  Multigraph() = default;

  /// Throws InvalidGraphError on a loop or an out-of-range endpoint.
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return degree_.size(); }

  /// Total edge multiplicity m.
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Distinct neighbours of `v`, sorted by id.
  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(Vertex v) const { return degree_[v]; }

  /// e(u, v); 0 when not adjacent.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;

  /// Connected and non-empty.
  bool connected() const noexcept { return connected_; }

  /// Throws InvalidGraphError unless connected().
  void require_connected() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::uint32_t> degree_;
  bool connected_ = false;
};

/// m - n + 1. Throws InvalidGraphError on a disconnected graph.
std::int64_t genus(const Multigraph& g);

/// Row `v` of the Laplacian: deg(v) on the diagonal, -e(u, v) elsewhere.
std::vector<std::int64_t> laplacian_row(const Multigraph& g, Vertex v);

/// f + x * Laplacian. Degree is preserved.
Divisor apply_firing(const Multigraph& g, const Divisor& f,
                     const FiringVector& x);

/// kappa(v) = deg(v) - 2.
Divisor canonical_divisor(const Multigraph& g);

}  // namespace cactusrank
