#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efpoly/hpoly.hpp"
#include "efpoly/matrix.hpp"
#include "efpoly/rational.hpp"

namespace efpoly {

/// minimize objective . x  subject to  a x (<=|=|>=) b, x free.
class LinProgram {
 public:
  LinProgram(RatVector objective, RatMatrix a, RatVector b, std::vector<Sense> senses);
  LinProgram(RatVector objective, const HPoly& constraints);

  const RatVector& objective() const noexcept { return objective_; }
  const RatMatrix& a() const noexcept { return a_; }
  const RatVector& b() const noexcept { return b_; }
  const std::vector<Sense>& senses() const noexcept { return senses_; }
  std::size_t num_vars() const noexcept { return a_.cols(); }
  std::size_t num_rows() const noexcept { return a_.rows(); }

 private:
  RatVector objective_;
  RatMatrix a_;
  RatVector b_;
  std::vector<Sense> senses_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

/**
 * Result of an exact LP solve.
 *
 * Farkas certificate convention (one multiplier y_i per row of the program):
 * y_i >= 0 on "<=" rows, y_i <= 0 on ">=" rows, free on "=" rows, with
 * sum_i y_i a_i = 0 and sum_i y_i b_i < 0. For an HPoly (only "<=" and "="
 * rows) this is the usual u >= 0, u A = 0, u b < 0 witness.
 */
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> optimum;
  std::optional<RatVector> point;
  std::optional<RatVector> dual_certificate;
  /// For Unbounded: a recession direction along which the objective decreases.
  std::optional<RatVector> ray;
};

/// Two-phase primal simplex over the rationals with Bland's rule. Every
/// outcome is re-verified exactly before it is returned.
LpOutcome solve(const LinProgram& lp);

/// Convenience: maximize c . x over p. The reported optimum is the maximum.
LpOutcome maximize(const HPoly& p, const RatVector& c);

/// Checks a Farkas certificate per the LpOutcome convention.
bool is_farkas_certificate(const RatMatrix& a, const RatVector& b, const std::vector<Sense>& senses,
                           const RatVector& y);

struct EmptinessCheck {
  bool empty = false;
  /// Farkas multipliers over p's rows when empty, a feasible point otherwise.
  RatVector certificate;
};

EmptinessCheck is_empty(const HPoly& p);

}  // namespace efpoly
