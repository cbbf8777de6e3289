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

#include "cactusrank/rank.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "cactusrank/errors.hpp"

// Exact rank by block elimination.
//
// Removing an effective divisor lambda of degree k from f and reducing towards
// the root, every cycle block either absorbs its zero part (good) or keeps one
// chip inside (bad), and the root ends with deg(f) - k - #bad. So f - lambda is
// equivalent to an effective divisor iff k + #bad <= deg(f), and
//
//   rank(f) + 1 = min { k : some lambda of degree k has k + #bad > deg(f) }.
//
// For a vertex w let d_w = lambda(T_w) + #bad(T_w) over the part T_w of the
// cactus hanging below w. A cycle with attach a and other vertices w_i at
// positions i is bad iff sum_i i * d_{w_i} differs from sum_i i * f(T_{w_i})
// mod its length, and d_a adds up the d_{w_i} and the bad flags of the blocks
// at a. Raising any d_w never lowers d_root, so each vertex only needs
// F_w(k) = max d_w over the lambdas with k chips in T_w. The tables are
// max-plus convolutions along the elimination; F_w(k) = k + cycles(T_w) once
// k >= cycles(T_w), so only min(K, cycles) + 1 entries are stored, where K
// bounds the chips that matter and is doubled until the answer fits.

namespace cactusrank {
namespace {

using Table = std::vector<std::int64_t>;  // empty: F(k) = k

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;

std::int64_t at(const Table& t, std::int64_t k) {
  if (t.empty()) return k;
  const auto size = static_cast<std::int64_t>(t.size());
  return k < size ? t[static_cast<std::size_t>(k)] : t.back() + (k - size + 1);
}

std::size_t table_size(std::int64_t k_max, std::int64_t cycles) {
  return static_cast<std::size_t>(std::min(k_max, cycles)) + 1;
}

Table max_plus(const Table& a, std::int64_t cycles_a, const Table& b,
               std::int64_t cycles_b, std::int64_t k_max) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Table c(table_size(k_max, cycles_a + cycles_b), kNone);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) {
      c[i + j] = std::max(c[i + j], a[i] + b[j]);
    }
  }
  return c;
}

// Best value and best value with a different residue mod the cycle length.
struct Best {
  std::int64_t v1 = kNone;
  std::uint64_t r1 = 0;
  std::int64_t v2 = kNone;
  std::uint64_t r2 = 0;

  void add(std::int64_t v, std::uint64_t r) {
    if (v > v1) {
      if (r != r1) {
        v2 = v1;
        r2 = r1;
      }
      v1 = v;
      r1 = r;
    } else if (r != r1 && v > v2) {
      v2 = v;
      r2 = r;
    }
  }

  std::int64_t best_avoiding(std::uint64_t r) const { return r1 != r ? v1 : v2; }
};

std::uint64_t residue(std::int64_t x, std::uint64_t len) {
  const auto m = static_cast<std::int64_t>(len);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

class Elimination {
 public:
  Elimination(const BlockEliminationScheme& scheme, const Divisor& f)
      : scheme_(scheme), f_(f) {}

  // Tables with at most k_max chips; fills the trace when asked.
  const Table& run(std::int64_t k_max, std::vector<RankStep>* trace) {
    sums_.assign(f_.begin(), f_.end());
    tables_.assign(f_.size(), Table{});
    cycles_.assign(f_.size(), 0);
    std::int64_t carried = degree(f_);
    for (std::size_t j = 0; j < scheme_.steps.size(); ++j) {
      const auto& [block, attach] = scheme_.steps[j];
      Table out;
      std::int64_t out_cycles = 0;
      std::optional<Goodness> goodness;
      if (block.kind == BlockKind::kEdge) {
        const Vertex u = block.vertices[0] == attach ? block.vertices[1] : block.vertices[0];
        sums_[attach] += sums_[u];
        out = std::move(tables_[u]);
        out_cycles = cycles_[u];
      } else {
        bool bad = false;
        out = cycle(block, attach, k_max, out_cycles, bad);
        goodness = bad ? Goodness::kBad : Goodness::kGood;
        if (bad) --carried;
      }
      if (trace) {
        trace->push_back({j + 1, block.kind, attach, goodness,
                          goodness == Goodness::kBad ? 1 : 0, carried});
      }
      if (out_cycles > 0) {
        // Chips on the attach vertex itself.
        for (std::size_t k = 1; k < out.size(); ++k) out[k] = std::max(out[k], out[k - 1] + 1);
        tables_[attach] = max_plus(tables_[attach], cycles_[attach], out,
                                   out_cycles, k_max);
        cycles_[attach] += out_cycles;
      }
    }
    return tables_[scheme_.root];
  }

  std::int64_t root_cycles() const { return cycles_[scheme_.root]; }

 private:
  Table cycle(const Block& block, Vertex attach, std::int64_t k_max,
              std::int64_t& out_cycles, bool& bad_at_zero) {
    const auto& vs = block.vertices;
    const std::uint64_t len = vs.size();
    const std::size_t ai = static_cast<std::size_t>(
        std::find(vs.begin(), vs.end(), attach) - vs.begin());

    std::uint64_t target = 0;
    std::int64_t below = 0;
    for (std::size_t t = 1; t < len; ++t) {
      const Vertex w = vs[(ai + t) % len];
      target = (target + t * residue(sums_[w], len)) % len;
      sums_[attach] += sums_[w];
      below += cycles_[w];
    }
    out_cycles = below + 1;
    Table out(table_size(k_max, out_cycles));

    if (len == 2) {
      const Table& member = tables_[vs[(ai + 1) % len]];
      for (std::size_t k = 0; k < out.size(); ++k) {
        const std::int64_t d = at(member, static_cast<std::int64_t>(k));
        out[k] = d + (residue(d, len) != target ? 1 : 0);
      }
      bad_at_zero = out[0] != at(member, 0);
      release_members(vs, ai);
      return out;
    }

    std::vector<Best> acc(1);
    acc[0].add(0, 0);
    std::int64_t acc_cycles = 0;
    for (std::size_t t = 1; t < len; ++t) {
      const Vertex w = vs[(ai + t) % len];
      if (cycles_[w] == 0) continue;
      const Table& member = tables_[w];
      acc_cycles += cycles_[w];
      std::vector<Best> next(table_size(k_max, acc_cycles));
      for (std::size_t a = 0; a < acc.size(); ++a) {
        for (std::size_t b = 0; b < member.size() && a + b < next.size(); ++b) {
          const std::int64_t d = member[b];
          const std::uint64_t r = t * residue(d, len) % len;
          next[a + b].add(acc[a].v1 + d, (acc[a].r1 + r) % len);
          if (acc[a].v2 != kNone) next[a + b].add(acc[a].v2 + d, (acc[a].r2 + r) % len);
        }
      }
      acc = std::move(next);
    }

    // Past the tabulated splits, or when one more chip only adds itself, a
    // chip on a suitable vertex of the cycle makes it bad at no extra cost.
    std::int64_t prev = kNone;
    for (std::size_t k = 0; k < out.size(); ++k) {
      const std::int64_t tab = k < acc.size() ? acc[k].v1 : kNone;
      const std::int64_t s = k == 0 ? tab : std::max(tab, prev + 1);
      if (k > 0 && s == prev + 1) {
        out[k] = s + 1;
      } else {
        out[k] = s + (acc[k].best_avoiding(target) == s ? 1 : 0);
      }
      prev = s;
    }
    bad_at_zero = out[0] != acc[0].v1;
    release_members(vs, ai);
    return out;
  }

  void release_members(const std::vector<Vertex>& vs, std::size_t ai) {
    for (std::size_t t = 1; t < vs.size(); ++t) Table{}.swap(tables_[vs[(ai + t) % vs.size()]]);
  }

  const BlockEliminationScheme& scheme_;
  const Divisor& f_;
  std::vector<std::int64_t> sums_;
  std::vector<Table> tables_;
  std::vector<std::int64_t> cycles_;
};

RankResult eliminate(const BlockEliminationScheme& scheme, const Divisor& f,
                     const RankOptions& options) {
  RankResult result;
  const std::int64_t target = degree(f) + 1;
  Elimination elim(scheme, f);
  for (std::int64_t k_max = 2;; k_max *= 2) {
    result.trace.clear();
    const Table& root = elim.run(k_max, options.trace ? &result.trace : nullptr);
    result.chip_bound = k_max;
    const std::int64_t stored = root.empty() ? 1 : static_cast<std::int64_t>(root.size());
    for (std::int64_t k = 0; k < stored; ++k) {
      if (at(root, k) >= target) {
        result.rank = k - 1;
        return result;
      }
    }
    if (elim.root_cycles() <= k_max) {
      // Untruncated: F(k) = k + genus from here on.
      result.rank = std::max(stored, target - elim.root_cycles()) - 1;
      return result;
    }
  }
}

void require_matching(const Multigraph& g, const Divisor& f) {
  if (f.size() != g.num_vertices()) {
    throw std::invalid_argument("divisor has " + std::to_string(f.size()) +
                                " entries for a graph on " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

std::optional<std::int64_t> rank_fast_path(const Multigraph& g,
                                           const Divisor& f) {
  require_matching(g, f);
  const std::int64_t d = degree(f);
  if (d < 0) return -1;
  const std::int64_t genus_g = genus(g);
  if (d > 2 * genus_g - 2) return d - genus_g;
  return std::nullopt;
}

RankResult rank(const Multigraph& g, const Divisor& f,
                const RankOptions& options) {
  require_matching(g, f);
  const BlockEliminationScheme scheme = build_bes(g);
  if (options.fast_path && !options.trace) {
    if (auto r = rank_fast_path(g, f)) return RankResult{*r, {}, 0};
  }
  return eliminate(scheme, f, options);
}

RankResult rank(const Multigraph& g, const Divisor& f,
                const BlockEliminationScheme& scheme,
                const RankOptions& options) {
  require_matching(g, f);
  if (!validate_bes(g, scheme)) {
    throw InvalidSchemeError("elimination scheme does not replay on the graph");
  }
  if (options.fast_path && !options.trace) {
    if (auto r = rank_fast_path(g, f)) return RankResult{*r, {}, 0};
  }
  return eliminate(scheme, f, options);
}

}  // namespace cactusrank
