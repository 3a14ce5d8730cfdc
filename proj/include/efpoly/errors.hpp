#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace efpoly {

class Rational;

/// Operand shapes do not agree (matrix/vector sizes, variable spaces).
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold for its inputs.
class PreconditionViolation : public std::logic_error {
 public:
  explicit PreconditionViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a polyhedron that must be non-empty turns out to be empty.
class EmptyPolyhedron : public PreconditionViolation {
 public:
  explicit EmptyPolyhedron(const std::string& what) : PreconditionViolation(what) {}
};

/// Raised when a bounded polyhedron is required. Carries a nonzero
/// recession direction as evidence.
class UnboundedPolyhedron : public PreconditionViolation {
 public:
  UnboundedPolyhedron(const std::string& what, std::vector<Rational> ray);
  const std::vector<Rational>& ray() const noexcept;

 private:
  std::vector<Rational> ray_;
};

/// A post-condition that is guaranteed by construction failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace efpoly
