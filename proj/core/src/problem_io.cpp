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

#include "cactusrank/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "cactusrank/errors.hpp"

namespace cactusrank {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class Tokens {
 public:
  explicit Tokens(std::string_view line) : rest_(line) {}

  std::optional<std::string_view> next() {
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
    if (rest_.empty()) return std::nullopt;
    std::size_t len = 0;
    while (len < rest_.size() && !is_space(rest_[len])) ++len;
    std::string_view tok = rest_.substr(0, len);
    rest_.remove_prefix(len);
    return tok;
  }

 private:
  std::string_view rest_;
};

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || first == ptr) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Vertex to_vertex(std::string_view tok, std::size_t line, std::size_t n) {
  const std::int64_t v = to_int(tok, line);
  if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
    throw InvalidGraphError("line " + std::to_string(line) + ": vertex " +
                            std::to_string(v) + " outside 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
  }
  return static_cast<Vertex>(v);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::vector<std::int64_t>> values;
  std::size_t divisor_line = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    Tokens tokens(line);
    const auto head = tokens.next();
    if (!head || head->front() == '#') continue;

    if (*head == "n") {
      if (n) throw ParseError(line_no, "duplicate 'n' line");
      const auto tok = tokens.next();
      if (!tok) throw ParseError(line_no, "'n' needs a vertex count");
      const std::int64_t count = to_int(*tok, line_no);
      if (count < 0 || static_cast<std::uint64_t>(count) >= std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count out of range");
      }
      n = static_cast<std::size_t>(count);
    } else if (*head == "e") {
      if (!n) throw ParseError(line_no, "'e' before 'n'");
      const auto a = tokens.next();
      const auto b = tokens.next();
      if (!a || !b) throw ParseError(line_no, "'e' needs two vertex ids");
      // Range first so a bad id is reported before the loop check.
      const Edge e{to_vertex(*a, line_no, *n), to_vertex(*b, line_no, *n)};
      if (tokens.next()) throw ParseError(line_no, "trailing tokens after edge");
      if (e.u == e.v) {
        throw InvalidGraphError("line " + std::to_string(line_no) +
                                ": loop at vertex " + std::to_string(e.u));
      }
      edges.push_back(e);
      continue;
    } else if (*head == "d") {
      if (!n) throw ParseError(line_no, "'d' before 'n'");
      if (values) throw ParseError(line_no, "duplicate 'd' line");
      values.emplace();
      values->reserve(*n);
      while (const auto tok = tokens.next()) values->push_back(to_int(*tok, line_no));
      divisor_line = line_no;
      continue;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(*head) + "'");
    }
    if (tokens.next()) throw ParseError(line_no, "trailing tokens");
  }

  if (!n) throw ParseError(line_no, "missing 'n' line");
  if (!values) throw ParseError(line_no, "missing 'd' line");
  if (values->size() != *n) {
    throw InvalidGraphError("line " + std::to_string(divisor_line) + ": divisor has " +
                            std::to_string(values->size()) + " entries, expected " +
                            std::to_string(*n));
  }

  ProblemFile out{Multigraph(*n, std::move(edges)), Divisor(std::move(*values))};
  out.graph.require_connected();
  return out;
}

ProblemFile read_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const Multigraph& g, const Divisor& f) {
  std::string out;
  out.reserve(16 * (g.num_edges() + f.size() + 1));
  char buf[32];
  auto put = [&](std::int64_t v) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
  };
  out += "n ";
  put(static_cast<std::int64_t>(g.num_vertices()));
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += "e ";
    put(e.u);
    out += ' ';
    put(e.v);
    out += '\n';
  }
  out += 'd';
  for (std::int64_t v : f) {
    out += ' ';
    put(v);
  }
  out += '\n';
  return out;
}

}  // namespace cactusrank
