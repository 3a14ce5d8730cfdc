#pragma once

#include "efpoly/matrix.hpp"
#include "efpoly/rational.hpp"
#include "efpoly/space.hpp"

namespace efpoly {

/// y = matrix x + offset, from `domain` coordinates to `codomain` coordinates.
class AffineMapSpec {
 public:
  AffineMapSpec() = default;
  /// Throws DimensionMismatch unless matrix is |codomain| x |domain| and
  /// offset has |codomain| entries (an empty offset means zero).
  AffineMapSpec(VarSpace domain, VarSpace codomain, RatMatrix matrix, RatVector offset = {});

  const VarSpace& domain() const noexcept { return domain_; }
  const VarSpace& codomain() const noexcept { return codomain_; }
  const RatMatrix& matrix() const noexcept { return matrix_; }
  const RatVector& offset() const noexcept { return offset_; }
  bool is_linear() const { return is_zero(offset_); }

  RatVector apply(const RatVector& x) const;

  friend bool operator==(const AffineMapSpec&, const AffineMapSpec&) = default;

 private:
  VarSpace domain_;
  VarSpace codomain_;
  RatMatrix matrix_;
  RatVector offset_;
};

}  // namespace efpoly
