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
#include <stdexcept>
#include <string>

namespace cactusrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Loop edges, out-of-range ids, disconnected input, length mismatches.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation that needs a cactus is handed something else.
class NotCactusError : public Error {
 public:
  NotCactusError(std::size_t u, std::size_t v)
      : Error("not a cactus: edge (" + std::to_string(u) + ", " +
              std::to_string(v) +
              ") lies in a block that is neither a bridge nor a cycle"),
        u_(u),
        v_(v) {}

  std::size_t u() const noexcept { return u_; }
  std::size_t v() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// A block elimination scheme that does not replay on its graph.
class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused an instance above its size limits.
class OracleGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace cactusrank
