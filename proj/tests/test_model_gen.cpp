#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/model_gen.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/projection.hpp"
#include "efpoly/random.hpp"
#include "efpoly/redundancy.hpp"

using namespace efpoly;

namespace {

// Independent oracle: every (n-1)-edge subset of K_n without a cycle.
std::vector<RatVector> spanning_trees(unsigned n) {
  const auto edges = complete_graph_edges(n);
  const std::size_t m = edges.size();
  std::vector<RatVector> out;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<unsigned> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](unsigned v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    RatVector x(m);
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1U << e))) continue;
      x[e] = 1;
      const unsigned a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool all_binary(const VPoly& v) {
  for (const auto& x : v.vertices())
    for (const auto& c : x)
      if (!(c.is_zero() || c == Rational(1))) return false;
  return true;
}

}  // namespace

TEST_CASE("standard TSP polytope") {
  const VPoly t3 = gen_standard_tsp(3);
  CHECK(t3.size() == 2);
  CHECK(t3.dim() == 6);
  CHECK(gen_standard_tsp(4).size() == 6);
  const VPoly t5 = gen_standard_tsp(5);
  CHECK(t5.size() == 24);
  for (const auto& x : t5.vertices()) {
    Rational ones;
    for (const auto& c : x) ones += c;
    CHECK(ones == Rational(5));
  }
  CHECK_THROWS_AS(gen_standard_tsp(2), PreconditionViolation);
  CHECK_THROWS_AS(gen_standard_tsp(7), PreconditionViolation);
}

TEST_CASE("assignment polytope vertices are the permutation matrices") {
  const std::size_t expected[] = {2, 6, 24};
  for (unsigned n = 3; n <= 5; ++n) {
    const HPoly ap = gen_alternate_tsp(n);
    CHECK(ap.dim() == (n - 1) * (n - 1));
    const VPoly v = enumerate_vertices(ap);
    CHECK(v.size() == expected[n - 3]);
    CHECK(all_binary(v));
  }
  CHECK(enumerate_vertices(gen_alternate_tsp(4)).sorted_vertices() ==
        enumerate_vertices_bruteforce(gen_alternate_tsp(4)).sorted_vertices());
}

TEST_CASE("tour and assignment examples") {
  TourVector t123{3, {{1, 2}, {2, 3}, {3, 1}}};
  auto a = tour_to_assignment(t123);
  CHECK(a.w == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  TourVector t132{3, {{1, 3}, {3, 2}, {2, 1}}};
  CHECK(tour_to_assignment(t132).w == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(assignment_to_tour(a) == t123);

  CHECK_THROWS_AS(tour_to_assignment(TourVector{4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}}), PreconditionViolation);
  CHECK_THROWS_AS(assignment_to_tour(AssignmentVector{3, {{1, 1}, {0, 0}}}), PreconditionViolation);
}

TEST_CASE("tour <-> assignment is a bijection between the two vertex sets") {
  for (unsigned n = 3; n <= 5; ++n) {
    const VPoly tours = gen_standard_tsp(n);
    const VPoly assign = enumerate_vertices(gen_alternate_tsp(n));
    REQUIRE(tours.size() == assign.size());
    std::set<std::vector<Rational>, decltype([](const RatVector& a, const RatVector& b) { return lex_less(a, b); })>
        images;
    for (const auto& x : tours.vertices()) {
      const TourVector t = tour_from_vector(n, x);
      const AssignmentVector a = tour_to_assignment(t);
      CHECK(assignment_to_tour(a) == t);
      const RatVector w = to_vector(a);
      CHECK(assign.has_vertex(w));
      images.insert(w);
    }
    CHECK(images.size() == assign.size());
    for (const auto& w : assign.vertices()) {
      const auto a = assignment_from_vector(n, w);
      CHECK(tour_to_assignment(assignment_to_tour(a)) == a);
    }
  }
}

TEST_CASE("Edmonds model") {
  const auto e3 = gen_mst_edmonds(3);
  CHECK(e3.poly.dim() == 3);
  CHECK(e3.poly.num_rows() == 1 + 3 + 3);
  const VPoly v3 = enumerate_vertices(e3.poly);
  CHECK(v3.size() == 3);
  CHECK(v3.sorted_vertices() == spanning_trees(3));

  const VPoly v4 = enumerate_vertices(gen_mst_edmonds(4).poly);
  CHECK(v4.size() == 16);
  CHECK(all_binary(v4));
  CHECK(v4.sorted_vertices() == spanning_trees(4));

  auto lp = solve(gen_mst_edmonds(4, RatVector{1, 2, 3, 4, 5, 6}).lp);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(*lp.optimum == Rational(1 + 2 + 3));  // star at city 1
  CHECK_THROWS_AS(gen_mst_edmonds(6), PreconditionViolation);
}

TEST_CASE("Martin models") {
  const HPoly q3 = gen_mst_martin(3);
  CHECK(q3.space().class_size("x") == 3);
  CHECK(q3.space().class_size("z") == 18);
  CHECK(gen_mst_martin(4).dim() == 6 + 48);

  // rows with k = i force z[k,k,.] = 0 on every point
  const VPoly vq = enumerate_vertices(q3);
  for (const auto& v : vq.vertices())
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned j = 1; j <= 3; ++j)
        if (j != k) CHECK(v[*q3.space().position_of({"z", {k, k, j}})].is_zero());

  auto px = project(q3, {"x"});
  REQUIRE(px.kind == ProjectionResult::Kind::Polyhedron);
  CHECK(poly_equal(px.poly, gen_mst_edmonds(3).poly));

  const HPoly qr = gen_mst_martin_reduced(3);
  CHECK(qr.space().classes() == std::vector<std::string>{"z"});
  CHECK(martin_root(3, {1, 2}) == 3);
  CHECK(martin_root(4, {1, 3}) == 2);
  CHECK_THROWS_AS(gen_mst_martin_reduced(2), PreconditionViolation);
}

TEST_CASE("column redundancy of class x in the flow model") {
  const HPoly q3 = gen_mst_martin(3);
  auto red = column_redundant(q3, "x");
  REQUIRE(red);
  const AffineMapSpec sub = martin_substitution(3);
  CHECK(red->reconstruction.domain() == sub.domain());
  CHECK(red->reconstruction.codomain() == sub.codomain());
  // the fitted map and the substitution agree on the whole reduced polytope
  const VPoly rv = enumerate_vertices(red->reduced);
  for (const auto& z : rv.vertices()) CHECK(red->reconstruction.apply(z) == sub.apply(z));
  CHECK(poly_equal(red->reduced, gen_mst_martin_reduced(3)));
}

TEST_CASE("LP optima over the flow model and its reduced form agree") {
  Rng rng(1234);
  for (unsigned n = 3; n <= 4; ++n) {
    const HPoly q = gen_mst_martin(n);
    const HPoly qr = gen_mst_martin_reduced(n);
    const AffineMapSpec sub = martin_substitution(n);
    const std::size_t ne = sub.codomain().size();
    for (int t = 0; t < 5; ++t) {
      RatVector c(ne);
      for (auto& v : c) v = rng.rational(-5, 10, 3);
      RatVector cq(q.dim());
      std::copy(c.begin(), c.end(), cq.begin());
      auto a = solve(LinProgram(cq, q));
      auto b = solve(LinProgram(sub.matrix().transpose() * c, qr));
      REQUIRE(a.status == LpStatus::Optimal);
      REQUIRE(b.status == LpStatus::Optimal);
      CHECK(*a.optimum == *b.optimum);
      CHECK(*a.optimum == *solve(gen_mst_edmonds(n, c).lp).optimum);
    }
  }
}

TEST_CASE("flow model n=4 projects onto the subtour-elimination polytope") {
  auto px = project(gen_mst_martin(4), {"x"});
  REQUIRE(px.kind == ProjectionResult::Kind::Polyhedron);
  CHECK(poly_equal(px.poly, gen_mst_edmonds(4).poly));
}
