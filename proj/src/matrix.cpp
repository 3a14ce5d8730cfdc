#include "efpoly/matrix.hpp"

#include <utility>

#include "efpoly/errors.hpp"

namespace efpoly {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionMismatch("RatMatrix: " + std::to_string(data_.size()) + " entries for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return RatVector(s.begin(), s.end());
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void RatMatrix::append_row(const RatVector& row) {
  if (row.size() != cols_)
    throw DimensionMismatch("append_row: row of length " + std::to_string(row.size()) +
                            " into matrix with " + std::to_string(cols_) + " columns");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::operator*(const RatVector& x) const {
  if (x.size() != cols_)
    throw DimensionMismatch("matrix-vector product: " + std::to_string(cols_) +
                            " columns vs vector of length " + std::to_string(x.size()));
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) y[r].add_mul((*this)(r, c), x[c]);
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& m) const {
  if (m.rows_ != cols_) throw DimensionMismatch("matrix product: inner dimensions differ");
  RatMatrix out(rows_, m.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < m.cols_; ++c)
        if (!m(k, c).is_zero()) out(r, c).add_mul(a, m(k, c));
    }
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    out += to_string(m.row(r));
  }
  return out + "]";
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, 0, {}};
  RatMatrix& a = res.matrix;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).reciprocal();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j).sub_mul(f, a(r, j));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size())
    throw DimensionMismatch("solve_linear: " + std::to_string(a.rows()) + " rows vs rhs of length " +
                            std::to_string(b.size()));
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < red.rank; ++i) {
    is_pivot[red.pivots[i]] = true;
    sol.particular[red.pivots[i]] = red.matrix(i, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.matrix(i, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  return solve_linear(a, RatVector(a.rows()))->nullspace;
}

}  // namespace efpoly
