#pragma once

#include <string>
#include <utility>

#include "efpoly/ef_analysis.hpp"
#include "efpoly/hpoly.hpp"
#include "efpoly/random.hpp"

namespace efpoly {

/**
 * Random non-empty polytope over `dim` variables of class `cls`: a box
 * around a random centre plus `cuts` random half-spaces that keep the centre
 * feasible. With `with_equality` one random hyperplane through the centre is
 * added as an equality row.
 */
HPoly random_polytope(Rng& rng, std::size_t dim, std::size_t cuts, const std::string& cls = "x",
                      bool with_equality = false);

/// Random vector with entries numerator in [lo, hi] over denominators up to max_den.
RatVector random_vector(Rng& rng, std::size_t n, long lo, long hi, long max_den = 1);

/**
 * Augmentation of a bounded non-empty base: base rows verbatim, then for each
 * of `new_vars` variables v_k of class `cls` a row a.x - v_k <= r with
 * random a and r, v_k >= 0, and an upper bound on v_k loose enough that every
 * base point extends; finally a loosened copy of one base inequality.
 */
HPoly random_augmentation(Rng& rng, const HPoly& base, const std::string& cls, std::size_t new_vars);

/// Random B1, B2 with q rows and positive diagonal C1, C2 sized to every row.
AugmentationSpec random_augmentation_spec(Rng& rng, const HPoly& p1, const HPoly& p2, std::size_t q);

/**
 * The block systems built from X = {A x <= a}, Y = {D y <= d} and linking
 * rows L = {B x + C y <= c}:
 *   K1 = [A 0; B C],  K2 = [B C; 0 D],  K3 = [A 0; B C; 0 D].
 * The linking rows hold on all of X x Y and B, C have full row rank, so
 * each of x and y alone is unrestricted by L.
 */
struct BlockInstance {
  HPoly x, y, l, k1, k2, k3;
};

BlockInstance random_block_instance(Rng& rng);

/**
 * Pair (p1 in class "x", p2 over x and "u") with p2 = {(x, u) : x = M u + c,
 * u in U} for a random polytope U. With `extended` p1 is the image M U + c,
 * so p2 projects onto p1; otherwise p1 is an unrelated random polytope.
 */
std::pair<HPoly, HPoly> random_lifted_pair(Rng& rng, bool extended);

}  // namespace efpoly
