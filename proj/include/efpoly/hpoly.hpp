#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "efpoly/matrix.hpp"
#include "efpoly/rational.hpp"
#include "efpoly/space.hpp"

namespace efpoly {

enum class Sense { LessEq, Equal, GreaterEq };

std::string to_string(Sense s);

/// One linear row: coeffs . x  (<= | = | >=)  rhs.
struct Constraint {
  RatVector coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs;

  bool satisfied_by(const RatVector& x) const;
  /// Rescales so the coefficient vector is primitive integer (positive factor).
  Constraint normalized() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/**
 * Polyhedron in inequality form {x : A x <= b} over a VarSpace, where some
 * rows may be equalities. Rows given as ">=" are stored negated as "<=", so
 * senses() only ever holds LessEq and Equal.
 */
class HPoly {
 public:
  HPoly() = default;
  HPoly(VarSpace space, RatMatrix a, RatVector b, std::vector<Sense> senses);
  HPoly(VarSpace space, const std::vector<Constraint>& rows);

  /// The whole space: no rows at all.
  static HPoly full_space(VarSpace space);

  const VarSpace& space() const noexcept { return space_; }
  const RatMatrix& a() const noexcept { return a_; }
  const RatVector& b() const noexcept { return b_; }
  const std::vector<Sense>& senses() const noexcept { return senses_; }

  std::size_t dim() const noexcept { return space_.size(); }
  std::size_t num_rows() const noexcept { return b_.size(); }

  Constraint row(std::size_t i) const;
  std::vector<Constraint> rows() const;

  /// Re-expresses this polyhedron in a larger (or reordered) space. Variables
  /// of target that are absent here get zero coefficients.
  HPoly embed(const VarSpace& target) const;

  /// Same polyhedron with a subset of rows (given by index, in order).
  HPoly select_rows(const std::vector<std::size_t>& rows) const;

  /// Appends rows; the result is a new polyhedron.
  HPoly with_rows(const std::vector<Constraint>& extra) const;

  /// Coefficient block on the given variable positions, all rows.
  RatMatrix block(const std::vector<std::size_t>& positions) const;

  friend bool operator==(const HPoly&, const HPoly&) = default;

 private:
  VarSpace space_;
  RatMatrix a_;
  RatVector b_;
  std::vector<Sense> senses_;
};

/// Polytope given by its vertices: Conv(vertices). Duplicates are dropped on
/// construction, first occurrence wins.
class VPoly {
 public:
  VPoly() = default;
  VPoly(VarSpace space, std::vector<RatVector> vertices);

  const VarSpace& space() const noexcept { return space_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  std::size_t dim() const noexcept { return space_.size(); }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(const RatVector& v) const;
  /// Vertices sorted lexicographically; handy for comparisons.
  std::vector<RatVector> sorted_vertices() const;

  friend bool operator==(const VPoly&, const VPoly&) = default;

 private:
  VarSpace space_;
  std::vector<RatVector> vertices_;
};

/// Lexicographic order on equally long rational vectors.
bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace efpoly
