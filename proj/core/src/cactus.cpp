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

#include "cactusrank/cactus.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "cactusrank/errors.hpp"

namespace cactusrank {
namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

struct Decomposition {
  std::vector<Block> blocks;
  std::optional<Edge> witness;
};

// Iterative Hopcroft-Tarjan over the collapsed adjacency. A parallel pair is
// pushed once with its multiplicity; a multiplicity >= 2 towards the DFS
// parent acts as a back edge.
Decomposition decompose(const Multigraph& g, Vertex root, bool stop_early) {
  g.require_connected();
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("root vertex out of range");

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  struct Link {
    Vertex from;
    Vertex to;
    std::uint32_t multiplicity;
  };

  Decomposition out;
  std::vector<std::uint32_t> disc(n, kUnseen);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<Vertex> slot_a(n, kNoVertex);
  std::vector<Vertex> slot_b(n, kNoVertex);
  std::vector<Frame> frames;
  std::vector<Link> links;
  std::vector<Vertex> members;
  std::uint32_t clock = 0;

  auto close_block = [&](Vertex top, Vertex child) {
    const std::uint32_t mark = static_cast<std::uint32_t>(out.blocks.size()) + 1;
    members.clear();
    members.push_back(top);
    stamp[top] = mark;
    std::size_t edge_count = 0;
    std::size_t first = links.size();
    while (true) {
      --first;
      const Link& l = links[first];
      edge_count += l.multiplicity;
      for (Vertex x : {l.from, l.to}) {
        if (stamp[x] != mark) {
          stamp[x] = mark;
          members.push_back(x);
        }
      }
      if (l.from == top && l.to == child) break;
    }

    Block block;
    const std::size_t link_count = links.size() - first;
    if (link_count == 1 && links[first].multiplicity == 1) {
      block.kind = BlockKind::kEdge;
      block.vertices = {top, child};
    } else if (edge_count == members.size()) {
      block.kind = BlockKind::kCycle;
      if (members.size() == 2) {
        block.vertices = {top, child};
      } else {
        for (std::size_t i = first; i < links.size(); ++i) {
          const Link& l = links[i];
          (slot_a[l.from] == kNoVertex ? slot_a[l.from] : slot_b[l.from]) = l.to;
          (slot_a[l.to] == kNoVertex ? slot_a[l.to] : slot_b[l.to]) = l.from;
        }
        block.vertices.reserve(members.size());
        Vertex prev = kNoVertex;
        Vertex cur = top;
        for (std::size_t i = 0; i < members.size(); ++i) {
          block.vertices.push_back(cur);
          const Vertex next = slot_a[cur] != prev ? slot_a[cur] : slot_b[cur];
          prev = cur;
          cur = next;
        }
        for (Vertex x : members) slot_a[x] = slot_b[x] = kNoVertex;
      }
    } else {
      const Link& l = links[first];
      if (!out.witness) out.witness = Edge{l.from, l.to};
      links.resize(first);
      return;
    }
    links.resize(first);
    out.blocks.push_back(std::move(block));
  };

  disc[root] = low[root] = clock++;
  frames.push_back({root, kNoVertex, 0});
  while (!frames.empty()) {
    Frame& frame = frames.back();
    const Vertex v = frame.v;
    const auto nbrs = g.neighbors(v);
    if (frame.next < nbrs.size()) {
      const auto nb = nbrs[frame.next++];
      const Vertex w = nb.vertex;
      if (w == frame.parent) {
        if (nb.multiplicity >= 2) low[v] = std::min(low[v], disc[w]);
      } else if (disc[w] == kUnseen) {
        links.push_back({v, w, nb.multiplicity});
        disc[w] = low[w] = clock++;
        frames.push_back({w, v, 0});
      } else if (disc[w] < disc[v]) {
        links.push_back({v, w, nb.multiplicity});
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const Vertex parent = frame.parent;
    frames.pop_back();
    if (parent == kNoVertex) break;
    low[parent] = std::min(low[parent], low[v]);
    if (low[v] >= disc[parent]) {
      close_block(parent, v);
      if (stop_early && out.witness) return out;
    }
  }
  return out;
}

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

struct BlockPair {
  Vertex u;
  Vertex v;
  std::uint32_t multiplicity;
};

// Vertex pairs a block occupies, with the multiplicity each must have.
// Empty when the vertex list cannot describe a block of that kind.
std::vector<BlockPair> block_pairs(const Block& block) {
  const auto& vs = block.vertices;
  if (block.kind == BlockKind::kEdge) {
    if (vs.size() != 2 || vs[0] == vs[1]) return {};
    return {{vs[0], vs[1], 1}};
  }
  if (vs.size() < 2) return {};
  if (vs.size() == 2) {
    if (vs[0] == vs[1]) return {};
    return {{vs[0], vs[1], 2}};
  }
  std::vector<BlockPair> pairs;
  pairs.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pairs.push_back({vs[i], vs[(i + 1) % vs.size()], 1});
  }
  return pairs;
}

bool has_distinct_vertices(const Block& block) {
  std::vector<Vertex> sorted = block.vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::uint32_t inner_degree(const Block& block) {
  return block.kind == BlockKind::kEdge ? 1 : 2;
}

}  // namespace

BlockDecomposition block_decomposition(const Multigraph& g) {
  Decomposition d = decompose(g, 0, /*stop_early=*/true);
  if (d.witness) throw NotCactusError(d.witness->u, d.witness->v);

  BlockDecomposition out;
  out.blocks = std::move(d.blocks);

  std::vector<std::uint32_t> count(g.num_vertices(), 0);
  std::unordered_map<std::uint64_t, std::size_t> owner;
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (Vertex v : out.blocks[b].vertices) ++count[v];
    for (const BlockPair& p : block_pairs(out.blocks[b])) owner[pair_key(p.u, p.v)] = b;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (count[v] >= 2) out.cut_vertices.push_back(v);
  }
  out.block_of_edge.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.block_of_edge.push_back(owner.at(pair_key(e.u, e.v)));
  return out;
}

bool is_cactus(const Multigraph& g) { return !non_cactus_witness(g); }

std::optional<Edge> non_cactus_witness(const Multigraph& g) {
  return decompose(g, 0, /*stop_early=*/true).witness;
}

BlockEliminationScheme build_bes(const Multigraph& g, Vertex root) {
  Decomposition d = decompose(g, root, /*stop_early=*/true);
  if (d.witness) throw NotCactusError(d.witness->u, d.witness->v);

  BlockEliminationScheme scheme;
  scheme.root = root;
  scheme.steps.reserve(d.blocks.size());
  for (Block& b : d.blocks) {
    const Vertex attach = b.vertices.front();
    scheme.steps.push_back({std::move(b), attach});
  }
  return scheme;
}

BESTree bes_tree(const BlockEliminationScheme& scheme) {
  BESTree tree;
  tree.root = scheme.root;
  std::map<Vertex, bool> removed;
  for (std::size_t i = 0; i < scheme.steps.size(); ++i) {
    const auto& [block, attach] = scheme.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    if (block_pairs(block).empty() || !has_distinct_vertices(block)) {
      throw InvalidSchemeError(where + "malformed block");
    }
    if (std::find(block.vertices.begin(), block.vertices.end(), attach) ==
        block.vertices.end()) {
      throw InvalidSchemeError(where + "attach vertex is not in its block");
    }
    if (removed[attach]) {
      throw InvalidSchemeError(where + "attach vertex was already contracted");
    }
    for (Vertex u : block.vertices) {
      if (u == attach) continue;
      if (u == scheme.root) throw InvalidSchemeError(where + "contracts the root");
      if (removed[u]) throw InvalidSchemeError(where + "vertex contracted twice");
      removed[u] = true;
      tree.parent[u] = attach;
    }
  }
  // Only attach vertices belong to the tree.
  std::map<Vertex, bool> is_node;
  for (const auto& step : scheme.steps) is_node[step.attach] = true;
  std::erase_if(tree.parent, [&](const auto& kv) { return !is_node[kv.first]; });
  tree.parent.erase(scheme.root);
  return tree;
}

bool is_free_block(const Multigraph& g, const Block& block, Vertex attach) {
  const auto pairs = block_pairs(block);
  if (pairs.empty() || !has_distinct_vertices(block)) return false;
  for (Vertex v : block.vertices) {
    if (v >= g.num_vertices()) return false;
  }
  if (std::find(block.vertices.begin(), block.vertices.end(), attach) ==
      block.vertices.end()) {
    return false;
  }
  for (const BlockPair& p : pairs) {
    if (g.multiplicity(p.u, p.v) != p.multiplicity) return false;
  }
  for (Vertex v : block.vertices) {
    if (v != attach && g.degree(v) != inner_degree(block)) return false;
  }
  return true;
}

bool validate_bes(const Multigraph& g, const BlockEliminationScheme& scheme) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || scheme.root >= n) return false;

  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> deg(n);
  std::unordered_map<std::uint64_t, std::uint32_t> live;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    for (const auto& nb : g.neighbors(v)) {
      if (v < nb.vertex) live[pair_key(v, nb.vertex)] = nb.multiplicity;
    }
  }

  for (const auto& [block, attach] : scheme.steps) {
    const auto pairs = block_pairs(block);
    if (pairs.empty() || !has_distinct_vertices(block)) return false;
    bool has_attach = false;
    for (Vertex v : block.vertices) {
      if (v >= n || !alive[v]) return false;
      has_attach |= v == attach;
    }
    if (!has_attach) return false;
    for (const BlockPair& p : pairs) {
      auto it = live.find(pair_key(p.u, p.v));
      if (it == live.end() || it->second != p.multiplicity) return false;
    }
    for (Vertex v : block.vertices) {
      if (v != attach && deg[v] != inner_degree(block)) return false;
    }
    for (const BlockPair& p : pairs) {
      live.erase(pair_key(p.u, p.v));
      deg[p.u] -= p.multiplicity;
      deg[p.v] -= p.multiplicity;
    }
    for (Vertex v : block.vertices) {
      if (v != attach) alive[v] = 0;
    }
  }

  if (!live.empty() || !alive[scheme.root]) return false;
  return std::count(alive.begin(), alive.end(), 1) == 1;
}

}  // namespace cactusrank
