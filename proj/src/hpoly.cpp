#include "efpoly/hpoly.hpp"

#include <algorithm>
#include <set>

#include "efpoly/errors.hpp"

namespace efpoly {

std::string to_string(Sense s) {
  switch (s) {
    case Sense::LessEq: return "<=";
    case Sense::Equal: return "=";
    case Sense::GreaterEq: return ">=";
  }
  return "?";
}

bool Constraint::satisfied_by(const RatVector& x) const {
  const Rational lhs = dot(coeffs, x);
  switch (sense) {
    case Sense::LessEq: return lhs <= rhs;
    case Sense::Equal: return lhs == rhs;
    case Sense::GreaterEq: return lhs >= rhs;
  }
  return false;
}

Constraint Constraint::normalized() const {
  RatVector all = coeffs;
  all.push_back(rhs);
  Rational f = primitive_scale(is_zero(coeffs) ? all : coeffs);
  Constraint c{coeffs, sense, rhs * f};
  for (auto& x : c.coeffs) x *= f;
  return c;
}

HPoly::HPoly(VarSpace space, RatMatrix a, RatVector b, std::vector<Sense> senses)
    : space_(std::move(space)), a_(std::move(a)), b_(std::move(b)), senses_(std::move(senses)) {
  if (a_.cols() != space_.size())
    throw DimensionMismatch("HPoly: matrix has " + std::to_string(a_.cols()) +
                            " columns but the space has " + std::to_string(space_.size()) +
                            " variables");
  if (a_.rows() != b_.size() || b_.size() != senses_.size())
    throw DimensionMismatch("HPoly: row counts of A, b and senses differ");
  for (std::size_t r = 0; r < senses_.size(); ++r) {
    if (senses_[r] != Sense::GreaterEq) continue;
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(r, c) = -a_(r, c);
    b_[r] = -b_[r];
    senses_[r] = Sense::LessEq;
  }
}

namespace {

RatMatrix matrix_of(const std::vector<Constraint>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r.coeffs);
  return m;
}

}  // namespace

HPoly::HPoly(VarSpace space, const std::vector<Constraint>& rows)
    : HPoly(space, matrix_of(rows, space.size()),
            [&] {
              RatVector b;
              for (const auto& r : rows) b.push_back(r.rhs);
              return b;
            }(),
            [&] {
              std::vector<Sense> s;
              for (const auto& r : rows) s.push_back(r.sense);
              return s;
            }()) {}

HPoly HPoly::full_space(VarSpace space) {
  const std::size_t n = space.size();
  return HPoly(std::move(space), RatMatrix(0, n), {}, {});
}

Constraint HPoly::row(std::size_t i) const { return {a_.row(i), senses_.at(i), b_.at(i)}; }

std::vector<Constraint> HPoly::rows() const {
  std::vector<Constraint> out;
  out.reserve(num_rows());
  for (std::size_t i = 0; i < num_rows(); ++i) out.push_back(row(i));
  return out;
}

HPoly HPoly::embed(const VarSpace& target) const {
  std::vector<std::size_t> where(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto p = target.position_of(space_[j]);
    if (!p) throw DimensionMismatch("embed: variable " + space_[j].name() + " missing from target");
    where[j] = *p;
  }
  RatMatrix a(num_rows(), target.size());
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (std::size_t j = 0; j < dim(); ++j) a(r, where[j]) = a_(r, j);
  return HPoly(target, std::move(a), b_, senses_);
}

HPoly HPoly::select_rows(const std::vector<std::size_t>& rows) const {
  std::vector<Constraint> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(row(r));
  return HPoly(space_, out);
}

HPoly HPoly::with_rows(const std::vector<Constraint>& extra) const {
  auto all = rows();
  all.insert(all.end(), extra.begin(), extra.end());
  return HPoly(space_, all);
}

RatMatrix HPoly::block(const std::vector<std::size_t>& positions) const {
  RatMatrix m(num_rows(), positions.size());
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (std::size_t j = 0; j < positions.size(); ++j) m(r, j) = a_(r, positions[j]);
  return m;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VPoly::VPoly(VarSpace space, std::vector<RatVector> vertices) : space_(std::move(space)) {
  std::set<RatVector, decltype(&lex_less)> seen(&lex_less);
  for (auto& v : vertices) {
    if (v.size() != space_.size())
      throw DimensionMismatch("VPoly: vertex of length " + std::to_string(v.size()) +
                              " in a space of dimension " + std::to_string(space_.size()));
    if (seen.insert(v).second) vertices_.push_back(std::move(v));
  }
}

bool VPoly::has_vertex(const RatVector& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<RatVector> VPoly::sorted_vertices() const {
  auto out = vertices_;
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace efpoly
