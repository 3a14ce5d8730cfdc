#include "doctest.h"

#include "efpoly/errors.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/random_models.hpp"

using namespace efpoly;

namespace {

HPoly poly(const std::string& cls, std::size_t dim, const std::vector<Constraint>& rows) {
  return HPoly(VarSpace::of_class(cls, dim), rows);
}

HPoly example_p() {
  return poly("x", 2,
              {{{1, -1}, Sense::GreaterEq, 6},
               {{1, 0}, Sense::GreaterEq, 0},
               {{1, 0}, Sense::LessEq, 6},
               {{0, 1}, Sense::GreaterEq, 0},
               {{0, 1}, Sense::LessEq, 5}});
}

HPoly example_q() {
  return poly("y", 2, {{{1, 1}, Sense::Equal, 6}, {{1, 0}, Sense::GreaterEq, Rational(3, 2)}, {{0, 1}, Sense::GreaterEq, 0}});
}

HPoly unit_square() {
  return poly("x", 2, {{{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::LessEq, 1}, {{0, -1}, Sense::LessEq, 0}});
}

HPoly p1() { return poly("x", 2, {{{2, 1}, Sense::LessEq, 6}, {{-1, 0}, Sense::LessEq, 0}, {{0, -1}, Sense::LessEq, 0}}); }

}  // namespace

TEST_CASE("enumerate_vertices examples") {
  CHECK(enumerate_vertices(example_p()).vertices() == std::vector<RatVector>{{6, 0}});
  CHECK(enumerate_vertices(example_q()).vertices() ==
        std::vector<RatVector>{{Rational(3, 2), Rational(9, 2)}, {6, 0}});
  CHECK(enumerate_vertices(unit_square()).size() == 4);
  CHECK(enumerate_vertices(p1()).vertices() == std::vector<RatVector>{{0, 0}, {0, 6}, {3, 0}});

  HPoly p2 = poly("w", 3,
                  {{{18, -1, 0}, Sense::LessEq, 23},
                   {{59, 0, 1}, Sense::LessEq, 84},
                   {{1, 0, 0}, Sense::GreaterEq, 0},
                   {{0, 1, 0}, Sense::GreaterEq, 0},
                   {{0, 0, 1}, Sense::GreaterEq, 0}});
  try {
    enumerate_vertices(p2);
    FAIL("expected UnboundedPolyhedron");
  } catch (const UnboundedPolyhedron& e) {
    CHECK(e.ray() == RatVector{0, 1, 0});
  }
  CHECK(enumerate_vertices(poly("x", 1, {{{1}, Sense::LessEq, -1}, {{1}, Sense::GreaterEq, 0}})).empty());
}

TEST_CASE("hull examples") {
  HPoly pt = hull(VPoly(VarSpace::of_class("x", 2), {{6, 0}}));
  CHECK(pt.num_rows() == 2);
  CHECK(poly_equal(pt, poly("x", 2, {{{1, 0}, Sense::Equal, 6}, {{0, 1}, Sense::Equal, 0}})));
  for (auto s : pt.senses()) CHECK(s == Sense::Equal);

  HPoly seg = hull(VPoly(VarSpace::of_class("y", 2), {{Rational(3, 2), Rational(9, 2)}, {6, 0}}));
  CHECK(seg.num_rows() == 3);
  CHECK(poly_equal(seg, example_q()));
  CHECK(enumerate_vertices(seg).vertices() == enumerate_vertices(example_q()).vertices());

  // Two 2x2 permutation matrices, row-major (w11 w12 w21 w22).
  VPoly ap(VarSpace::of_class("w", 4), {{1, 0, 0, 1}, {0, 1, 1, 0}});
  HPoly birkhoff = poly("w", 4,
                        {{{1, 1, 0, 0}, Sense::Equal, 1},
                         {{0, 0, 1, 1}, Sense::Equal, 1},
                         {{1, 0, 1, 0}, Sense::Equal, 1},
                         {{0, 1, 0, 1}, Sense::Equal, 1},
                         {{1, 0, 0, 0}, Sense::GreaterEq, 0},
                         {{0, 1, 0, 0}, Sense::GreaterEq, 0},
                         {{0, 0, 1, 0}, Sense::GreaterEq, 0},
                         {{0, 0, 0, 1}, Sense::GreaterEq, 0}});
  HPoly h = hull(ap);
  CHECK(poly_equal(h, birkhoff));
  CHECK(h.num_rows() == 5);  // 3 independent equalities + 2 facets of a segment

  CHECK_THROWS_AS(hull(VPoly(VarSpace::of_class("x", 2), {})), PreconditionViolation);
}

TEST_CASE("contains examples") {
  CHECK(contains(p1(), {3, 0}));
  CHECK_FALSE(contains(p1(), {4, 0}));
  CHECK_THROWS_AS(contains(p1(), {1, 2, 3}), DimensionMismatch);
  const VPoly verts = enumerate_vertices(p1());
  for (const auto& v : verts.vertices()) CHECK(contains(p1(), v));
}

TEST_CASE("poly_equal examples") {
  HPoly dup = p1().with_rows({p1().row(0)});
  CHECK(poly_equal(p1(), dup));
  // P and Q re-embedded in the common space (x1, x2, y1, y2).
  const VarSpace common = VarSpace::of_class("x", 2).concat(VarSpace::of_class("y", 2));
  CHECK_FALSE(poly_equal(example_p().embed(common), example_q().embed(common)));
  CHECK(poly_equal(unit_square(), hull(enumerate_vertices(unit_square()))));
  CHECK_FALSE(poly_equal(unit_square(), p1()));
  // unbounded route
  HPoly half = poly("x", 2, {{{1, 0}, Sense::LessEq, 0}});
  HPoly half2 = poly("x", 2, {{{2, 0}, Sense::LessEq, 0}, {{3, 0}, Sense::LessEq, 5}});
  CHECK(poly_equal(half, half2));
  CHECK_FALSE(poly_equal(half, HPoly::full_space(VarSpace::of_class("x", 2))));
  CHECK_THROWS_AS(poly_equal(example_p(), example_q()), DimensionMismatch);
}

TEST_CASE("is_bounded examples") {
  auto full = is_bounded(poly("x", 2, {{{0, 0}, Sense::LessEq, 0}}));
  CHECK_FALSE(full.bounded);
  CHECK(full.ray == RatVector{1, 0});
  CHECK(is_bounded(unit_square()).bounded);
  HPoly p2 = poly("w", 3,
                  {{{18, -1, 0}, Sense::LessEq, 23},
                   {{59, 0, 1}, Sense::LessEq, 84},
                   {{1, 0, 0}, Sense::GreaterEq, 0},
                   {{0, 1, 0}, Sense::GreaterEq, 0},
                   {{0, 0, 1}, Sense::GreaterEq, 0}});
  auto b2 = is_bounded(p2);
  CHECK_FALSE(b2.bounded);
  CHECK(b2.ray == RatVector{0, 1, 0});
  // a ray that is not a coordinate direction
  auto diag = is_bounded(poly("x", 2, {{{1, -1}, Sense::Equal, 0}, {{-1, 0}, Sense::LessEq, 0}}));
  CHECK_FALSE(diag.bounded);
  CHECK(diag.ray == RatVector{1, 1});
}

TEST_CASE("double description agrees with the brute-force oracle") {
  Rng rng(31337);
  for (int t = 0; t < 80; ++t) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 4));
    const auto cuts = static_cast<std::size_t>(rng.integer(0, 10 - 2 * static_cast<long>(dim)));
    const HPoly p = random_polytope(rng, dim, cuts, "x", rng.integer(0, 3) == 0);
    const VPoly dd = enumerate_vertices(p);
    const VPoly bf = enumerate_vertices_bruteforce(p);
    REQUIRE(dd.sorted_vertices() == bf.sorted_vertices());
    for (const auto& v : dd.vertices()) CHECK(contains(p, v));
    const HPoly h = hull(dd);
    CHECK(poly_equal(p, h));
    CHECK(enumerate_vertices(h).sorted_vertices() == dd.sorted_vertices());
  }
}

TEST_CASE("extreme rays of a simple cone") {
  // nonnegative orthant of R^3 plus one redundant row
  RatMatrix m = RatMatrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {-1, -1, -1}});
  auto rays = extreme_rays(m);
  CHECK(rays == std::vector<RatVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(extreme_rays(RatMatrix::from_rows({{1, 0}})), PreconditionViolation);
}
