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

#include "cactusrank/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cactusrank/errors.hpp"

namespace cactusrank {
namespace {

void require_instance(const Multigraph& g, const Divisor& f) {
  g.require_connected();
  if (f.size() != g.num_vertices()) {
    throw std::invalid_argument("divisor length does not match the graph");
  }
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

ReducedDivisor q_reduce(const Multigraph& g, const Divisor& f, Vertex q) {
  require_instance(g, f);
  const std::size_t n = g.num_vertices();
  if (q >= n) throw std::out_of_range("base vertex out of range");

  ReducedDivisor out{f, q, FiringVector(n)};
  auto& val = out.values;
  auto& x = out.firing;

  // Layers by distance from q.
  std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<Vertex> order{q};
  dist[q] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& nb : g.neighbors(order[head])) {
      if (dist[nb.vertex] == std::numeric_limits<std::uint32_t>::max()) {
        dist[nb.vertex] = dist[order[head]] + 1;
        order.push_back(nb.vertex);
      }
    }
  }

  // Make every vertex other than q non-negative: the set of vertices at
  // distance >= t borrows from layer t - 1, deepest layer first.
  for (std::size_t end = order.size(); end > 1;) {
    const std::uint32_t t = dist[order[end - 1]];
    std::size_t begin = end;
    while (begin > 1 && dist[order[begin - 1]] == t) --begin;
    std::int64_t times = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Vertex w = order[i];
      if (val[w] >= 0) continue;
      std::int64_t up = 0;
      for (const auto& nb : g.neighbors(w)) {
        if (dist[nb.vertex] < t) up += nb.multiplicity;
      }
      times = std::max(times, ceil_div(-val[w], up));
    }
    if (times > 0) {
      for (std::size_t i = begin; i < order.size(); ++i) x[order[i]] += times;
      for (std::size_t i = begin; i < end; ++i) {
        const Vertex w = order[i];
        for (const auto& nb : g.neighbors(w)) {
          if (dist[nb.vertex] < t) {
            val[w] += times * nb.multiplicity;
            val[nb.vertex] -= times * nb.multiplicity;
          }
        }
      }
    }
    end = begin;
  }

  // Dhar: burn from q; a vertex catches fire once it has more burnt edges
  // than chips. The unburnt set can fire; repeat until everything burns.
  std::vector<char> burnt(n);
  std::vector<std::int64_t> heat(n);
  std::vector<Vertex> queue;
  while (true) {
    std::fill(burnt.begin(), burnt.end(), 0);
    std::fill(heat.begin(), heat.end(), 0);
    queue.assign(1, q);
    burnt[q] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& nb : g.neighbors(queue[head])) {
        const Vertex u = nb.vertex;
        if (burnt[u]) continue;
        heat[u] += nb.multiplicity;
        if (heat[u] > val[u]) {
          burnt[u] = 1;
          queue.push_back(u);
        }
      }
    }
    if (queue.size() == n) break;

    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (Vertex w = 0; w < n; ++w) {
      if (!burnt[w] && heat[w] > 0) times = std::min(times, val[w] / heat[w]);
    }
    for (Vertex w = 0; w < n; ++w) {
      if (burnt[w]) continue;
      x[w] -= times;
      for (const auto& nb : g.neighbors(w)) {
        if (burnt[nb.vertex]) {
          val[w] -= times * nb.multiplicity;
          val[nb.vertex] += times * nb.multiplicity;
        }
      }
    }
  }
  return out;
}

bool is_l_effective(const Multigraph& g, const Divisor& f) {
  require_instance(g, f);
  if (degree(f) < 0) return false;
  return q_reduce(g, f, 0).values[0] >= 0;
}

void for_each_effective(std::size_t n, std::int64_t d,
                        const std::function<bool(const Divisor&)>& visit) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (n == 0) {
    if (d == 0) visit(Divisor{});
    return;
  }
  Divisor a(n);
  a[0] = d;
  while (true) {
    if (!visit(a)) return;
    // Rightmost non-zero entry before the last one moves a chip right and
    // pulls the tail along with it.
    std::size_t i = n - 1;
    while (i > 0 && a[i - 1] == 0) --i;
    if (i == 0) return;
    --i;
    const std::int64_t tail = a[n - 1];
    a[n - 1] = 0;
    --a[i];
    a[i + 1] = tail + 1;
  }
}

std::vector<Divisor> enumerate_effective(std::size_t n, std::int64_t d) {
  std::vector<Divisor> out;
  for_each_effective(n, d, [&](const Divisor& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

RankOracle::RankOracle(const Multigraph& g, OracleLimits limits)
    : graph_(g), limits_(limits) {
  g.require_connected();
  if (g.num_vertices() > limits_.max_vertices) {
    throw OracleGuardError("oracle refuses graphs with more than " +
                           std::to_string(limits_.max_vertices) + " vertices");
  }
}

std::int64_t RankOracle::rank(const Divisor& f) {
  require_instance(graph_, f);
  const std::int64_t d = degree(f);
  if (d < 0) return -1;
  if (d > limits_.max_rank) {
    throw OracleGuardError("oracle refuses divisors of degree above " +
                           std::to_string(limits_.max_rank));
  }
  return rank_of_reduced(q_reduce(graph_, f, 0).values);
}

std::int64_t RankOracle::rank_of_reduced(const Divisor& reduced) {
  if (reduced[0] < 0) return -1;
  std::vector<std::int64_t> key(reduced.begin(), reduced.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::int64_t worst = std::numeric_limits<std::int64_t>::max();
  for (Vertex v = 0; v < graph_.num_vertices() && worst > -1; ++v) {
    Divisor less = reduced;
    --less[v];
    worst = std::min(worst, rank_of_reduced(q_reduce(graph_, less, 0).values));
  }
  const std::int64_t r = worst + 1;
  memo_.emplace(std::move(key), r);
  return r;
}

std::int64_t oracle_rank(const Multigraph& g, const Divisor& f,
                         const OracleLimits& limits) {
  return RankOracle(g, limits).rank(f);
}

std::int64_t oracle_rank_by_enumeration(const Multigraph& g, const Divisor& f,
                                        const OracleLimits& limits) {
  require_instance(g, f);
  if (g.num_vertices() > limits.max_vertices) {
    throw OracleGuardError("oracle refuses graphs with more than " +
                           std::to_string(limits.max_vertices) + " vertices");
  }
  if (!is_l_effective(g, f)) return -1;
  for (std::int64_t r = 1;; ++r) {
    if (r > limits.max_rank) {
      throw OracleGuardError("rank exceeds the enumeration limit " +
                             std::to_string(limits.max_rank));
    }
    bool all = true;
    for_each_effective(g.num_vertices(), r, [&](const Divisor& lambda) {
      all = is_l_effective(g, f - lambda);
      return all;
    });
    if (!all) return r - 1;
  }
}

RiemannRochCheck rr_check(const Multigraph& g, const Divisor& f,
                          const RankFunction& rank_fn) {
  RiemannRochCheck out;
  out.lhs = rank_fn(g, f) - rank_fn(g, canonical_divisor(g) - f);
  out.rhs = degree(f) - genus(g) + 1;
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace cactusrank
