#include "doctest.h"

#include "efpoly/errors.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/random_models.hpp"
#include "efpoly/redundancy.hpp"

using namespace efpoly;

namespace {

HPoly poly(const VarSpace& s, const std::vector<Constraint>& rows) { return HPoly(s, rows); }

HPoly p1() {
  return poly(VarSpace::of_class("x", 2), {{{2, 1}, Sense::LessEq, 6}, {{-1, 0}, Sense::LessEq, 0}, {{0, -1}, Sense::LessEq, 0}});
}

HPoly unit_square(const VarSpace& s) {
  return poly(s, {{{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::LessEq, 1}, {{0, -1}, Sense::LessEq, 0}});
}

VarSpace xy() { return VarSpace::of_class("x", 1).concat(VarSpace::of_class("y", 1)); }

}  // namespace

TEST_CASE("row_redundant examples") {
  HPoly dup = p1().with_rows({p1().row(0)});
  CHECK(row_redundant(dup, 3));
  CHECK(row_redundant(dup, 0));

  HPoly bounds = poly(VarSpace::of_class("x", 1), {{{1}, Sense::LessEq, 1}, {{1}, Sense::LessEq, 2}});
  CHECK(row_redundant(bounds, 1));
  CHECK_FALSE(row_redundant(bounds, 0));

  CHECK_FALSE(row_redundant(p1(), 0));

  // equality: only redundant when both halves are implied
  HPoly eq = poly(VarSpace::of_class("x", 1), {{{1}, Sense::Equal, 1}, {{1}, Sense::LessEq, 1}});
  CHECK_FALSE(row_redundant(eq, 0));
  CHECK(row_redundant(eq, 1));
  HPoly eq2 = poly(VarSpace::of_class("x", 1), {{{1}, Sense::Equal, 1}, {{1}, Sense::LessEq, 1}, {{-1}, Sense::LessEq, -1}});
  CHECK(row_redundant(eq2, 0));

  CHECK_THROWS_AS(row_redundant(poly(VarSpace::of_class("x", 1), {{{1}, Sense::LessEq, -1}, {{-1}, Sense::LessEq, 0}}), 0),
                  EmptyPolyhedron);
  CHECK_THROWS_AS(row_redundant(p1(), 7), std::out_of_range);
}

TEST_CASE("remove_row_redundancy examples") {
  const VarSpace s = VarSpace::of_class("x", 2);
  HPoly sq = unit_square(s);
  std::vector<Constraint> extra;
  for (int i = 0; i < 10; ++i) extra.push_back(sq.row(static_cast<std::size_t>(i % 4)));
  HPoly noisy = sq.with_rows(extra);
  HPoly clean = remove_row_redundancy(noisy);
  CHECK(clean.num_rows() == 4);
  CHECK(poly_equal(clean, sq));

  HPoly h = hull(VPoly(s, {{0, 0}, {2, 1}, {1, 3}, {Rational(1, 2), 1}}));
  CHECK(remove_row_redundancy(h) == h);
}

TEST_CASE("remove_row_redundancy is idempotent and preserves the set") {
  Rng rng(555);
  for (int t = 0; t < 40; ++t) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 4));
    HPoly p = random_polytope(rng, dim, static_cast<std::size_t>(rng.integer(0, 6)), "x", rng.coin());
    // add a few implied rows: positive combinations of existing ones
    std::vector<Constraint> extra;
    for (int k = 0; k < 3; ++k) {
      const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(p.num_rows()) - 1));
      Constraint c = p.row(i);
      if (c.sense == Sense::Equal) continue;
      c.rhs += rng.rational(0, 2, 2);
      extra.push_back(c);
    }
    p = p.with_rows(extra);
    const HPoly once = remove_row_redundancy(p);
    CHECK(poly_equal(p, once));
    CHECK(remove_row_redundancy(once) == once);
    for (std::size_t r = 0; r < once.num_rows(); ++r) CHECK_FALSE(row_redundant(once, r));
  }
}

TEST_CASE("hull output is row-minimal") {
  Rng rng(808);
  for (int t = 0; t < 30; ++t) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<RatVector> pts;
    const long count = rng.integer(1, 7);
    for (long k = 0; k < count; ++k) pts.push_back(random_vector(rng, dim, -3, 3, 2));
    const HPoly h = hull(VPoly(VarSpace::of_class("x", dim), pts));
    const auto rep = redundancy_report(h);
    CHECK(rep.redundant_rows.empty());
  }
}

TEST_CASE("column_redundant examples") {
  // y = 2x, 0 <= x <= 1
  HPoly line = poly(xy(), {{{-2, 1}, Sense::Equal, 0}, {{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0}});
  auto red = column_redundant(line, "y");
  REQUIRE(red);
  CHECK(red->reconstruction.matrix() == RatMatrix::from_rows({{2}}));
  CHECK(red->reconstruction.offset() == RatVector{0});
  CHECK(poly_equal(red->reduced,
                   poly(VarSpace::of_class("x", 1), {{{1}, Sense::LessEq, 1}, {{-1}, Sense::LessEq, 0}})));

  CHECK_FALSE(column_redundant(unit_square(xy()), "y"));

  CHECK_THROWS_AS(column_redundant(line, "z"), PreconditionViolation);
  HPoly ray = poly(xy(), {{{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::Equal, 0}});
  CHECK_THROWS_AS(column_redundant(ray, "y"), UnboundedPolyhedron);
  CHECK_THROWS_AS(column_redundant(unit_square(VarSpace::of_class("x", 2)), "x"), PreconditionViolation);
}

TEST_CASE("column redundancy gives a two-way vertex correspondence") {
  Rng rng(4141);
  int some = 0;
  for (int t = 0; t < 30; ++t) {
    // y = M x + c glued onto a random polytope in x
    const auto nx = static_cast<std::size_t>(rng.integer(1, 3));
    const auto ny = static_cast<std::size_t>(rng.integer(1, 2));
    HPoly base = random_polytope(rng, nx, static_cast<std::size_t>(rng.integer(0, 3)));
    const VarSpace space = base.space().concat(VarSpace::of_class("y", ny));
    HPoly p = base.embed(space);
    std::vector<Constraint> link;
    for (std::size_t i = 0; i < ny; ++i) {
      RatVector a(nx + ny);
      for (std::size_t j = 0; j < nx; ++j) a[j] = rng.rational(-2, 2);
      a[nx + i] = -1;
      link.push_back({a, Sense::Equal, rng.rational(-2, 2)});
    }
    p = p.with_rows(link);
    auto red = column_redundant(p, "y");
    REQUIRE(red);
    ++some;
    const VPoly pv = enumerate_vertices(p);
    const VPoly rv = enumerate_vertices(red->reduced);
    CHECK(pv.size() == rv.size());
    for (const auto& v : rv.vertices()) {
      RatVector full = v;
      const RatVector d = red->reconstruction.apply(v);
      full.insert(full.end(), d.begin(), d.end());
      CHECK(pv.has_vertex(full));
    }
    for (const auto& v : pv.vertices()) {
      RatVector k(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nx));
      CHECK(rv.has_vertex(k));
    }
  }
  CHECK(some == 30);
}

TEST_CASE("redundancy report") {
  auto rep = redundancy_report(p1());
  CHECK(rep.minimal);
  CHECK(rep.columns_checked);
  HPoly line = poly(xy(), {{{-2, 1}, Sense::Equal, 0}, {{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0},
                           {{1, 0}, Sense::LessEq, 3}});
  auto r2 = redundancy_report(line);
  CHECK_FALSE(r2.minimal);
  CHECK(r2.redundant_rows == std::vector<std::size_t>{3});
  CHECK(r2.redundant_classes.size() == 2);  // x and y determine each other
}
