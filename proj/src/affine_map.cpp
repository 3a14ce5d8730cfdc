#include "efpoly/affine_map.hpp"

#include "efpoly/errors.hpp"

namespace efpoly {

AffineMapSpec::AffineMapSpec(VarSpace domain, VarSpace codomain, RatMatrix matrix, RatVector offset)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (offset_.empty()) offset_.resize(codomain_.size());
  if (matrix_.rows() != codomain_.size() || matrix_.cols() != domain_.size() || offset_.size() != codomain_.size())
    throw DimensionMismatch("affine map: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", spaces need " + std::to_string(codomain_.size()) +
                            "x" + std::to_string(domain_.size()));
}

RatVector AffineMapSpec::apply(const RatVector& x) const {
  if (x.size() != domain_.size()) throw DimensionMismatch("affine map: argument has wrong length");
  RatVector y = matrix_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset_[i];
  return y;
}

}  // namespace efpoly
