#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abchrom {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input to build_graph.
class InvalidGraph : public Error {
 public:
  enum class Kind { vertex_out_of_range, self_loop, duplicate_edge, negative_order };

  InvalidGraph(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed text input. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A coloring that breaks the Coloring invariants (empty class, color 0, ...).
class InvalidColoring : public Error {
 public:
  using Error::Error;
};

/// A coloring paired with a graph of a different order.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its documented precondition (e.g. acyclicity test on an improper coloring).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured search budget ran out. Never converted into a negative answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Family parameters outside the range where a construction or closed form applies.
class InvalidFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace abchrom
