#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "efpoly/rational.hpp"

namespace efpoly {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Builds from a list of equally long rows. An empty list gives a 0 x cols matrix.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  const std::vector<Rational>& entries() const noexcept { return data_; }

  void append_row(const RatVector& row);
  RatMatrix transpose() const;
  RatVector operator*(const RatVector& x) const;
  RatMatrix operator*(const RatMatrix& m) const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const RatMatrix& m);

struct RrefResult {
  RatMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

/// One particular solution of a x = b plus a basis of the null space of a.
struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> nullspace;
};

/// Solves a x = b exactly. Free variables are set to zero in the particular
/// solution; the null-space basis has one vector per free column (with a 1 in
/// that column). Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b);

/// Basis of {x : a x = 0}, same convention as solve_linear.
std::vector<RatVector> nullspace(const RatMatrix& a);

std::size_t rank(const RatMatrix& m);

}  // namespace efpoly
