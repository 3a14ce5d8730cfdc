#pragma once

#include <string>
#include <utility>
#include <vector>

#include "efpoly/affine_map.hpp"
#include "efpoly/hpoly.hpp"

namespace efpoly {

/**
 * Outcome of projecting onto a set of kept variables.
 *
 *  - Polyhedron: an irredundant H-representation over the kept space.
 *  - FullSpace:  every point of the kept space has a preimage.
 *  - Empty:      the input was empty; `witness` holds Farkas multipliers over
 *                the input rows (u >= 0 on inequalities, u A = 0, u b < 0).
 */
struct ProjectionResult {
  enum class Kind { Polyhedron, FullSpace, Empty };

  Kind kind = Kind::FullSpace;
  VarSpace space;  // the kept variables, in input order
  HPoly poly;      // meaningful for Polyhedron only
  RatVector witness;

  std::size_t dim() const noexcept { return space.size(); }
  bool is_full_space() const noexcept { return kind == Kind::FullSpace; }
  bool is_empty() const noexcept { return kind == Kind::Empty; }
  /// The result as an HPoly in all three cases (Empty becomes {0 <= -1}).
  HPoly as_hpoly() const;
  /// "Polyhedron(<rows> rows)", "FullSpace(<dim>)" or "Empty".
  std::string describe() const;
};

/// Fourier-Motzkin projection onto the listed classes. Throws
/// PreconditionViolation for an empty or unknown class list.
ProjectionResult project(const HPoly& u, const std::vector<std::string>& keep_classes);

/// Same, with kept variables given as positions into u.space().
ProjectionResult project_positions(const HPoly& u, const std::vector<std::size_t>& keep);

/**
 * Projection onto the first x_dim variables when their coefficient block is
 * zero: the answer is all of R^x_dim or nothing. Throws PreconditionViolation
 * when the block is not zero.
 */
ProjectionResult project_degenerate_case(const HPoly& u, std::size_t x_dim);

/**
 * For x = C y + b and objective alpha . x returns (C^T alpha, alpha . b), so
 * that alpha . x = (C^T alpha) . y + alpha . b on the graph of the map.
 * Throws PreconditionViolation when C has a negative entry.
 */
std::pair<RatVector, Rational> pushforward_objective(const RatVector& alpha, const AffineMapSpec& map);

}  // namespace efpoly
