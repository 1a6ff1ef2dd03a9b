#pragma once

#include <stdexcept>
#include <string>

namespace concordia {

/// A structurally invalid expression (weights not summing to one,
/// overlapping ordinal blocks, malformed shuffle data, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation requires arguments it was not given
/// (inverted rectangle, path leaving the unit square, parameter out
/// of a family's domain).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// The expression has no shuffle normal form (a convex node is present,
/// or a leaf whose mass is not supported on a graph).
class NotAShuffle : public std::runtime_error {
 public:
  explicit NotAShuffle(const std::string& what) : std::runtime_error(what) {}
};

/// No closed form is available for the requested coefficient; the caller
/// may fall back to the checkerboard or Monte Carlo oracle.
class NotComputableExactly : public std::runtime_error {
 public:
  explicit NotComputableExactly(const std::string& what) : std::runtime_error(what) {}
};

/// A point lies outside the attainable region (or outside a 2D projection).
class OutOfRegion : public std::runtime_error {
 public:
  explicit OutOfRegion(const std::string& what) : std::runtime_error(what) {}
};

/// A synthesis target does not lie on the requested face.
class OutOfFace : public std::runtime_error {
 public:
  explicit OutOfFace(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric routine failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (JSON syntax, unknown tags); carries line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

}  // namespace concordia
