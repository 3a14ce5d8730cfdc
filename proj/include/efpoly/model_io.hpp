#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "efpoly/affine_map.hpp"
#include "efpoly/ef_analysis.hpp"
#include "efpoly/hpoly.hpp"
#include "efpoly/lp.hpp"

namespace efpoly {

/// An LP as stored on disk: minimize objective . x over constraints.
struct LpModel {
  RatVector objective;
  HPoly constraints;

  LinProgram program() const { return LinProgram(objective, constraints); }
  friend bool operator==(const LpModel&, const LpModel&) = default;
};

/**
 * One model file. Line oriented, '#' starts a comment:
 *
 *   hpoly <name>                  vpoly <name>             lp <name>
 *   vars <class>:<count> ...      vars ...                 vars ...
 *   <coeff> ... <op> <rhs>        vertex <coord> ...       min <coeff> ...
 *   end                           end                      <rows as hpoly>
 *                                                          end
 *   map <name>                    augspec <name>
 *   from <class>:<count> ...      b1 <coeff> ...   (one line per row)
 *   to <class>:<count> ...        b2 <coeff> ...
 *   <matrix row> ...              c1 <diagonal entries>
 *   offset <coord> ...            c2 <diagonal entries>
 *   end                           end
 *
 * op is one of <=, =, >=. Numbers are integers, fractions p/q or decimals.
 * Variables of a class are indexed 1..count in declaration order.
 */
struct ModelFile {
  std::string name;
  std::variant<HPoly, VPoly, LpModel, AffineMapSpec, AugmentationSpec> body;

  /// "hpoly", "vpoly", "lp", "map" or "augspec".
  std::string kind() const;

  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

/// Throws ParseError (1-based line and column) on malformed input, a
/// duplicate class or a row of the wrong length.
ModelFile parse_model(std::string_view text);

/// Inverse of parse_model. Throws PreconditionViolation when a class is
/// split into several runs, since "<class>:<count>" cannot express that.
std::string print_model(const ModelFile& m);

/// Reads a file and parses it. Throws std::runtime_error if it cannot be read.
ModelFile load_model(const std::string& path);

/// Convenience accessors; throw ParseError naming the expected kind.
HPoly expect_hpoly(const ModelFile& m);
VPoly expect_vpoly(const ModelFile& m);
LpModel expect_lp(const ModelFile& m);
AffineMapSpec expect_map(const ModelFile& m);
AugmentationSpec expect_augspec(const ModelFile& m);

}  // namespace efpoly
