#pragma once

#include <vector>

#include "efpoly/hpoly.hpp"
#include "efpoly/matrix.hpp"
#include "efpoly/rational.hpp"

namespace efpoly {

/// Exactly one of: bounded, or an explicit nonzero recession direction.
struct BoundednessCheck {
  bool bounded = true;
  RatVector ray;
};

/// Throws EmptyPolyhedron on empty input.
BoundednessCheck is_bounded(const HPoly& p);

/// All rows satisfied exactly. Throws DimensionMismatch.
bool contains(const HPoly& p, const RatVector& x);

/**
 * Extreme rays of the pointed cone {y : m y <= 0} by double description.
 * Rays come back as primitive integer vectors. Throws PreconditionViolation
 * when the cone is not pointed (rank(m) < m.cols()).
 */
std::vector<RatVector> extreme_rays(const RatMatrix& m);

/// Vertex set of a polytope. Empty input gives an empty VPoly; unbounded
/// input throws UnboundedPolyhedron carrying a recession ray.
VPoly enumerate_vertices(const HPoly& p);

/// Reference implementation: solves every dim-subset of rows as equalities.
/// Exponential; meant for cross-checking at small sizes.
VPoly enumerate_vertices_bruteforce(const HPoly& p);

/**
 * Irredundant H-representation of Conv(v): the affine hull as equalities
 * followed by one inequality per facet, all rows primitive integer.
 * Throws PreconditionViolation for an empty vertex list.
 */
HPoly hull(const VPoly& v);

/// inner is a subset of outer (LP per row of outer). Spaces must match.
bool includes(const HPoly& outer, const HPoly& inner);

/**
 * Equality of solution sets. q may list the same variables in another
 * order; it is re-embedded into p's space first. Bounded inputs compare
 * vertex sets, anything else goes through LP inclusion both ways.
 */
bool poly_equal(const HPoly& p, const HPoly& q);

}  // namespace efpoly
