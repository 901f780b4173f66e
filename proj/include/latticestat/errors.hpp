#pragma once

#include <stdexcept>
#include <string>

namespace latticestat {

/// Mismatched spaces, dimensions, or matrix shapes.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated preconditions: empty lists, nonpositive epsilon, oversized
/// oracle instances, out-of-range coordinates.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Textual input that does not conform to the grammar. Carries a position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), line(0), col(0) {}
  std::size_t line;
  std::size_t col;
};

/// A name used in a config that was never defined.
struct ResolveError : std::runtime_error {
  explicit ResolveError(const std::string& what) : std::runtime_error(what) {}
};

/// Invariant breakage inside the library itself.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace latticestat
