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

// Command-line front end. Exit codes: 0 ok, 2 parse/usage error, 3 invalid
// graph, 4 not a cactus, 5 oracle limit exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cactusrank/cactus.hpp"
#include "cactusrank/errors.hpp"
#include "cactusrank/generator.hpp"
#include "cactusrank/oracle.hpp"
#include "cactusrank/problem_io.hpp"
#include "cactusrank/rank.hpp"

namespace {

using namespace cactusrank;

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kInvalidGraph = 3,
  kNotCactus = 4,
  kOracleGuard = 5,
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ProblemFile load(const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return parse_problem(text);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

const char* kind_name(BlockKind k) { return k == BlockKind::kEdge ? "edge" : "cycle"; }

void print_divisor(const Divisor& f) {
  std::cout << 'd';
  for (std::int64_t v : f) std::cout << ' ' << v;
  std::cout << '\n';
}

int cmd_rank(const std::string& path, bool trace, bool fast_only) {
  const ProblemFile p = load(path);
  if (fast_only) {
    if (auto bad = non_cactus_witness(p.graph)) throw NotCactusError(bad->u, bad->v);
    if (auto r = rank_fast_path(p.graph, p.divisor)) {
      std::cout << *r << '\n';
    } else {
      std::cout << "none\n";
    }
    return kOk;
  }
  RankOptions options;
  options.trace = trace;
  const RankResult result = rank(p.graph, p.divisor, options);
  for (const RankStep& s : result.trace) {
    std::cerr << "step " << s.step << ' ' << kind_name(s.kind) << " attach " << s.attach;
    if (s.goodness) std::cerr << (*s.goodness == Goodness::kGood ? " good" : " bad");
    std::cerr << " charge " << s.charge << " degree " << s.degree << '\n';
  }
  std::cout << result.rank << '\n';
  return kOk;
}

int cmd_oracle(const std::string& path, std::size_t max_n, std::int64_t max_r) {
  const ProblemFile p = load(path);
  std::cout << oracle_rank(p.graph, p.divisor, OracleLimits{max_n, max_r}) << '\n';
  return kOk;
}

int cmd_reduce(const std::string& path, std::int64_t base) {
  const ProblemFile p = load(path);
  if (base < 0 || static_cast<std::uint64_t>(base) >= p.graph.num_vertices()) {
    throw InvalidGraphError("base vertex " + std::to_string(base) + " out of range");
  }
  print_divisor(q_reduce(p.graph, p.divisor, static_cast<Vertex>(base)).values);
  return kOk;
}

int cmd_rrcheck(const std::string& path) {
  const ProblemFile p = load(path);
  RankFunction fn;
  if (is_cactus(p.graph)) {
    fn = [](const Multigraph& g, const Divisor& f) { return rank(g, f).rank; };
  } else {
    fn = [](const Multigraph& g, const Divisor& f) { return oracle_rank(g, f); };
  }
  const RiemannRochCheck c = rr_check(p.graph, p.divisor, fn);
  if (c.holds) {
    std::cout << "OK\n";
  } else {
    std::cout << "FAIL lhs=" << c.lhs << " rhs=" << c.rhs << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path) {
  const ProblemFile p = load(path);
  std::cout << (is_cactus(p.graph) ? "cactus" : "not-cactus") << '\n';
  return kOk;
}

int cmd_bes(const std::string& path) {
  const ProblemFile p = load(path);
  const BlockEliminationScheme scheme = build_bes(p.graph);
  for (std::size_t i = 0; i < scheme.steps.size(); ++i) {
    const auto& [block, attach] = scheme.steps[i];
    std::cout << "step " << i + 1 << " block " << kind_name(block.kind) << " [";
    for (std::size_t j = 0; j < block.vertices.size(); ++j) {
      std::cout << (j ? " " : "") << block.vertices[j];
    }
    std::cout << "] attach " << attach << '\n';
  }
  std::cout << "root " << scheme.root << '\n';
  return kOk;
}

int cmd_gen(const GeneratorParams& params) {
  const ProblemFile p = generate_problem(params);
  std::cout << serialize_problem(p.graph, p.divisor);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baker-Norine rank of divisors on cactus graphs"};
  app.require_subcommand(1);

  std::string file;
  bool trace = false;
  bool fast_only = false;
  std::size_t max_n = OracleLimits{}.max_vertices;
  std::int64_t max_r = OracleLimits{}.max_rank;
  std::int64_t base = 0;
  GeneratorParams gen;

  auto* rank_cmd = app.add_subcommand("rank", "rank by block elimination");
  rank_cmd->add_option("file", file, "problem file, '-' for stdin")->required();
  rank_cmd->add_flag("--trace", trace, "per-block records on stderr");
  rank_cmd->add_flag("--fast-path-only", fast_only,
                     "only the degree shortcut; prints 'none' when it does not apply");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force rank (small graphs)");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--max-n", max_n, "vertex limit");
  oracle_cmd->add_option("--max-r", max_r, "degree/rank limit");

  auto* reduce_cmd = app.add_subcommand("reduce", "q-reduced equivalent divisor");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--base", base, "base vertex q");

  auto* rr_cmd = app.add_subcommand("rrcheck", "check the Riemann-Roch identity");
  rr_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "is the graph a cactus");
  check_cmd->add_option("file", file)->required();

  auto* bes_cmd = app.add_subcommand("bes", "print a block elimination scheme");
  bes_cmd->add_option("file", file)->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate a random cactus problem");
  gen_cmd->add_option("--vertices", gen.vertices)->required();
  gen_cmd->add_option("--cycles", gen.cycles);
  gen_cmd->add_option("--max-cycle-len", gen.max_cycle_len);
  gen_cmd->add_option("--degree", gen.divisor_degree);
  gen_cmd->add_option("--seed", gen.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*rank_cmd) return cmd_rank(file, trace, fast_only);
    if (*oracle_cmd) return cmd_oracle(file, max_n, max_r);
    if (*reduce_cmd) return cmd_reduce(file, base);
    if (*rr_cmd) return cmd_rrcheck(file);
    if (*check_cmd) return cmd_check(file);
    if (*bes_cmd) return cmd_bes(file);
    if (*gen_cmd) return cmd_gen(gen);
  } catch (const ParseError& e) {
    std::cerr << "cactusrank: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidGraphError& e) {
    std::cerr << "cactusrank: invalid graph: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const NotCactusError& e) {
    std::cerr << "cactusrank: " << e.what() << '\n';
    return kNotCactus;
  } catch (const OracleGuardError& e) {
    std::cerr << "cactusrank: oracle limit: " << e.what() << '\n';
    return kOracleGuard;
  } catch (const InputError& e) {
    std::cerr << "cactusrank: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cactusrank: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
