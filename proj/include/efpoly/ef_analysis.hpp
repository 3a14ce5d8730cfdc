#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efpoly/affine_map.hpp"
#include "efpoly/hpoly.hpp"
#include "efpoly/projection.hpp"

namespace efpoly {

/// No class label in common.
bool independent_spaces(const VarSpace& p, const VarSpace& q);

/**
 * Label test, cross-checked by projection when both are non-empty and
 * independent: embedded in the union space, each must project onto the
 * other's variables as the full space. Throws InternalError if the two
 * tests disagree.
 */
bool independent_spaces(const HPoly& p, const HPoly& q);
bool independent_spaces(const VPoly& p, const VPoly& q);
bool independent_spaces(const HPoly& p, const VPoly& q);
bool independent_spaces(const VPoly& p, const HPoly& q);

struct AugmentationCheck {
  enum class Reason {
    Holds,
    NotByConstruction,  // base variables or rows are missing from the candidate
    CutsBase,           // some base point has no extension
  };

  bool holds = false;
  Reason reason = Reason::NotByConstruction;
  /// CutsBase: a base point outside the candidate's projection.
  RatVector witness;
  std::string detail;
};

std::string to_string(AugmentationCheck::Reason r);

/**
 * candidate augments base: it contains every base row (up to a positive
 * factor, any nonzero factor for equalities) over a superset of base's
 * variables, and every base point extends to a candidate point.
 * Throws EmptyPolyhedron for an empty base.
 */
AugmentationCheck check_augmentation(const HPoly& base, const HPoly& candidate);

/// Coupling data for W. b1 is q x n1, b2 is q x n2; c1 and c2 are diagonal
/// with positive diagonal.
struct AugmentationSpec {
  RatMatrix b1;
  RatMatrix b2;
  RatMatrix c1;
  RatMatrix c2;

  std::size_t slack_count() const noexcept { return b1.rows(); }

  friend bool operator==(const AugmentationSpec&, const AugmentationSpec&) = default;
};

/**
 * W over (x1, x2, u), rows in this order:
 *   C1 A1 x1 <= C1 a1
 *   B1 x1 + B2 x2 - u <= 0
 *   C2 A2 x2 <= C2 a2
 *   sign rows of p1, sign rows of p2, u >= 0.
 * Sign rows are the rows -x_j <= 0. If c1 (c2) is sized to the non-sign rows
 * only, the sign rows are left unscaled and moved to the tail; if it is sized
 * to all rows, every row is scaled in place.
 *
 * u gets the first free label of "u", "u1", "u2", ... Both projections are
 * checked before returning (InternalError on failure).
 */
HPoly construct_mutual_augmentation(const HPoly& p1, const HPoly& p2, const AugmentationSpec& spec);

struct EFVerdict {
  /// Projection onto the target variables equals the target.
  std::optional<bool> def1;
  /// Set when a supplied map carries the candidate onto the target.
  std::optional<AffineMapSpec> def2;
  bool def2_checked = false;
  /// x in target <=> exists w with (x, w) in candidate.
  std::optional<bool> def3;
  /// Projection computed for definitions 1 and 3.
  std::optional<ProjectionResult> projection;
  /// Definition 3: a point outside the target that still extends, or a
  /// target point that does not, when one was found.
  RatVector counterexample;
  std::vector<std::string> notes;

  bool holds(int definition) const;
};

/**
 * Is candidate an extended formulation of target under definition 1, 2 or 3?
 * The candidate is embedded in the union of both spaces first, so target
 * variables it does not mention are free. Definition 2 needs a witness map
 * from the candidate's variables to the target's; it throws
 * PreconditionViolation without one and UnboundedPolyhedron for an unbounded
 * candidate.
 */
EFVerdict check_ef(const HPoly& target, const HPoly& candidate, int definition,
                   const std::optional<AffineMapSpec>& witness = std::nullopt);
EFVerdict check_ef(const VPoly& target, const HPoly& candidate, int definition,
                   const std::optional<AffineMapSpec>& witness = std::nullopt);

enum class RelationTag { WellDefinedEF, NoRelation, IllDefined };

std::string to_string(RelationTag t);

struct RelationClass {
  RelationTag tag = RelationTag::NoRelation;
  /// q as an extended formulation of p, and p as one of q.
  EFVerdict q_of_p;
  EFVerdict p_of_q;
  /// Non-empty when NoRelation rests on the witnesses supplied.
  std::string caveat;
};

/**
 * Overlapping spaces: WellDefinedEF when definition 1 holds in either
 * direction, NoRelation otherwise. Independent spaces: IllDefined when some
 * witness verifies under definition 2 in either direction, otherwise
 * NoRelation with a caveat, since no witness search is attempted.
 */
RelationClass classify_relationship(const HPoly& p, const HPoly& q, const std::vector<AffineMapSpec>& witnesses);

/**
 * Definition-1 verdict of p3 for p1 equals that of p2 for p1. Preconditions
 * (PreconditionViolation): p1's variables are among p2's, p3 augments p2,
 * and the blocks of p1 and p2 on p1's variables are nonzero.
 */
bool overlap_augmentation_invariance(const HPoly& p1, const HPoly& p2, const HPoly& p3);

}  // namespace efpoly
