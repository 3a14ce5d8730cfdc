#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efpoly/affine_map.hpp"
#include "efpoly/hpoly.hpp"

namespace efpoly {

/**
 * Removing the row leaves the solution set unchanged: the row's left-hand
 * side, optimised over the remaining rows, stays within its right-hand side.
 * An equality row counts only if both of its inequality halves are implied.
 * Throws EmptyPolyhedron on empty p and std::out_of_range on a bad index.
 */
bool row_redundant(const HPoly& p, std::size_t row);

/// Drops redundant rows one by one in ascending index order.
HPoly remove_row_redundancy(const HPoly& p);

struct ColumnReduction {
  /// Dropped-class coordinates as an affine function of the kept ones.
  AffineMapSpec reconstruction;
  /// Conv of the vertices with the dropped class removed.
  HPoly reduced;
};

/**
 * Column redundancy of one class: on every vertex the class is an affine
 * function of the remaining coordinates, and the vertices of the reduced
 * polytope correspond one to one with those of p. The reconstruction is
 * fitted on the vertices, so it is unique only on the affine hull of the
 * reduced polytope.
 * Throws PreconditionViolation for an unknown class (or p's only class),
 * EmptyPolyhedron, UnboundedPolyhedron.
 */
std::optional<ColumnReduction> column_redundant(const HPoly& p, const std::string& drop_class);

struct RedundancyReport {
  std::vector<std::size_t> redundant_rows;
  std::vector<std::pair<std::string, AffineMapSpec>> redundant_classes;
  /// Column redundancy is only decided for bounded polyhedra.
  bool columns_checked = false;
  bool minimal = false;
};

RedundancyReport redundancy_report(const HPoly& p);

namespace detail {
/// row_redundant without the emptiness check; p must be non-empty.
bool row_implied(const HPoly& p, std::size_t row);
}  // namespace detail

}  // namespace efpoly
