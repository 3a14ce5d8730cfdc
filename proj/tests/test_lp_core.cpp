#include "doctest.h"

#include <functional>
#include <optional>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/random.hpp"

using namespace efpoly;

namespace {

HPoly poly(std::size_t dim, const std::vector<Constraint>& rows) {
  return HPoly(VarSpace::of_class("x", dim), rows);
}

// P1 = {x >= 0 : 2 x1 + x2 <= 6}
HPoly p1() { return poly(2, {{{2, 1}, Sense::LessEq, 6}, {{-1, 0}, Sense::LessEq, 0}, {{0, -1}, Sense::LessEq, 0}}); }

// P = {x1 - x2 >= 6, 0 <= x1 <= 6, 0 <= x2 <= 5}
HPoly example_p() {
  return poly(2, {{{1, -1}, Sense::GreaterEq, 6},
                  {{1, 0}, Sense::GreaterEq, 0},
                  {{1, 0}, Sense::LessEq, 6},
                  {{0, 1}, Sense::GreaterEq, 0},
                  {{0, 1}, Sense::LessEq, 5}});
}

// Brute-force LP oracle: minimum of c.x over all basic feasible points of a
// bounded system (every d-subset of rows solved as equalities).
std::optional<Rational> brute_force_min(const HPoly& p, const RatVector& c) {
  const std::size_t d = p.dim(), m = p.num_rows();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      RatMatrix a(0, d);
      RatVector b;
      for (auto r : pick) {
        a.append_row(p.a().row(r));
        b.push_back(p.b()[r]);
      }
      if (rank(a) != d) return;
      auto sol = solve_linear(a, b);
      if (!sol) return;
      for (std::size_t r = 0; r < m; ++r)
        if (!p.row(r).satisfied_by(sol->particular)) return;
      const Rational v = dot(c, sol->particular);
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t r = start; r < m; ++r) {
      pick[depth] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("solve: spec examples") {
  SUBCASE("min x1 over P1 is 0 at the origin") {
    auto out = solve(LinProgram({1, 0}, p1()));
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.optimum == Rational(0));
    CHECK(*out.point == RatVector{0, 0});
  }
  SUBCASE("empty box is infeasible with a Farkas witness") {
    HPoly box = poly(1, {{{1}, Sense::LessEq, -1}, {{1}, Sense::GreaterEq, 0}});
    LinProgram lp({0}, box);
    auto out = solve(lp);
    REQUIRE(out.status == LpStatus::Infeasible);
    CHECK(is_farkas_certificate(lp.a(), lp.b(), lp.senses(), *out.dual_certificate));
    for (const auto& u : *out.dual_certificate) CHECK(u.sign() >= 0);
  }
  SUBCASE("min -x1 over x1 >= 0 is unbounded") {
    auto out = solve(LinProgram({-1}, poly(1, {{{1}, Sense::GreaterEq, 0}})));
    REQUIRE(out.status == LpStatus::Unbounded);
    REQUIRE(out.ray);
    CHECK((*out.ray)[0].sign() > 0);
  }
}

TEST_CASE("solve: senses kept in LinProgram and certificate sign convention") {
  // x1 + x2 >= 4, x1 <= 1, x2 <= 1 is infeasible; raw >= row kept.
  RatMatrix a = RatMatrix::from_rows({{1, 1}, {1, 0}, {0, 1}});
  LinProgram lp({0, 0}, a, {4, 1, 1}, {Sense::GreaterEq, Sense::LessEq, Sense::LessEq});
  auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Infeasible);
  const auto& y = *out.dual_certificate;
  CHECK(y[0].sign() <= 0);
  CHECK(is_farkas_certificate(lp.a(), lp.b(), lp.senses(), y));
}

TEST_CASE("solve: equality rows and free variables") {
  // min x1 - x2 s.t. x1 + x2 = 6, x1 >= 3/2, x2 >= 0  -> (3/2, 9/2), value -3
  HPoly q = poly(2, {{{1, 1}, Sense::Equal, 6}, {{1, 0}, Sense::GreaterEq, Rational(3, 2)}, {{0, 1}, Sense::GreaterEq, 0}});
  auto out = solve(LinProgram({1, -1}, q));
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(*out.optimum == Rational(-3));
  CHECK(*out.point == RatVector{Rational(3, 2), Rational(9, 2)});

  // redundant duplicate equality rows must not break phase 1 -> phase 2
  HPoly dup = poly(2, {{{1, 1}, Sense::Equal, 6}, {{2, 2}, Sense::Equal, 12}, {{1, -1}, Sense::Equal, 0}});
  auto o2 = solve(LinProgram({1, 1}, dup));
  REQUIRE(o2.status == LpStatus::Optimal);
  CHECK(*o2.point == RatVector{3, 3});

  CHECK_THROWS_AS(LinProgram({1}, dup), DimensionMismatch);
}

TEST_CASE("is_empty examples") {
  auto e1 = is_empty(example_p());
  CHECK_FALSE(e1.empty);
  CHECK(e1.certificate == RatVector{6, 0});

  HPoly bad = poly(2, {{{0, 0}, Sense::LessEq, -1}});
  auto e2 = is_empty(bad);
  CHECK(e2.empty);
  CHECK(is_farkas_certificate(bad.a(), bad.b(), bad.senses(), e2.certificate));

  auto e3 = is_empty(poly(2, {{{0, 0}, Sense::LessEq, 0}}));
  CHECK_FALSE(e3.empty);
}

TEST_CASE("degenerate single-point polytope does not cycle") {
  // P of the independent-spaces example is a single point; maximise in many directions.
  const HPoly p = example_p();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      auto out = maximize(p, {a, b});
      REQUIRE(out.status == LpStatus::Optimal);
      CHECK(*out.point == RatVector{6, 0});
    }
}

TEST_CASE("random bounded LPs agree with brute-force vertex enumeration") {
  Rng rng(4242);
  int feasible = 0;
  for (int t = 0; t < 120; ++t) {
    std::vector<Constraint> rows;
    for (int j = 0; j < 3; ++j) {
      RatVector lo(3), hi(3);
      lo[j] = -1;
      hi[j] = 1;
      rows.push_back({lo, Sense::LessEq, rng.rational(0, 5)});
      rows.push_back({hi, Sense::LessEq, rng.rational(0, 5)});
    }
    const long extra = rng.integer(0, 2);
    for (long k = 0; k < extra; ++k)
      rows.push_back({{rng.rational(-3, 3, 2), rng.rational(-3, 3, 2), rng.rational(-3, 3, 2)},
                      Sense::LessEq, rng.rational(-2, 6, 2)});
    const HPoly p = poly(3, rows);
    const RatVector c{rng.rational(-4, 4, 3), rng.rational(-4, 4, 3), rng.rational(-4, 4, 3)};
    auto out = solve(LinProgram(c, p));
    auto oracle = brute_force_min(p, c);
    if (!oracle) {
      CHECK(out.status == LpStatus::Infeasible);
      CHECK(is_farkas_certificate(p.a(), p.b(), p.senses(), *out.dual_certificate));
      continue;
    }
    ++feasible;
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.optimum == *oracle);
    for (std::size_t r = 0; r < p.num_rows(); ++r) CHECK(p.row(r).satisfied_by(*out.point));
  }
  CHECK(feasible > 60);
}
