#include "efpoly/random_models.hpp"

#include <algorithm>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/polyhedron.hpp"

namespace efpoly {

RatVector random_vector(Rng& rng, std::size_t n, long lo, long hi, long max_den) {
  RatVector v(n);
  for (auto& x : v) x = rng.rational(lo, hi, max_den);
  return v;
}

HPoly random_polytope(Rng& rng, std::size_t dim, std::size_t cuts, const std::string& cls, bool with_equality) {
  const RatVector centre = random_vector(rng, dim, -3, 3, 2);
  std::vector<Constraint> rows;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVector up(dim), down(dim);
    up[j] = 1;
    down[j] = -1;
    rows.push_back({up, Sense::LessEq, centre[j] + rng.rational(1, 4, 2)});
    rows.push_back({down, Sense::LessEq, -centre[j] + rng.rational(1, 4, 2)});
  }
  for (std::size_t k = 0; k < cuts; ++k) {
    RatVector a = random_vector(rng, dim, -3, 3);
    if (is_zero(a)) a[rng.integer(0, static_cast<long>(dim) - 1)] = 1;
    rows.push_back({a, Sense::LessEq, dot(a, centre) + rng.rational(0, 2, 3)});
  }
  if (with_equality && dim > 1) {
    RatVector a = random_vector(rng, dim, -2, 2);
    if (is_zero(a)) a[0] = 1;
    rows.push_back({a, Sense::Equal, dot(a, centre)});
  }
  return HPoly(VarSpace::of_class(cls, dim), rows);
}

}  // namespace efpoly

namespace efpoly {

HPoly random_augmentation(Rng& rng, const HPoly& base, const std::string& cls, std::size_t new_vars) {
  const std::size_t n = base.dim();
  const VarSpace space = base.space().concat(VarSpace::of_class(cls, new_vars));
  std::vector<Constraint> rows;
  for (const auto& r : base.rows()) {
    RatVector a(n + new_vars);
    std::copy(r.coeffs.begin(), r.coeffs.end(), a.begin());
    rows.push_back({std::move(a), r.sense, r.rhs});
  }
  for (std::size_t k = 0; k < new_vars; ++k) {
    const RatVector a = random_vector(rng, n, -3, 3);
    const Rational r = rng.rational(-2, 2, 2);
    const LpOutcome top = maximize(base, a);
    if (top.status != LpStatus::Optimal) throw PreconditionViolation("random_augmentation: base must be bounded and non-empty");
    Rational need = *top.optimum - r;
    if (need.sign() < 0) need = 0;

    RatVector link(n + new_vars), lower(n + new_vars), upper(n + new_vars);
    std::copy(a.begin(), a.end(), link.begin());
    link[n + k] = -1;
    lower[n + k] = -1;
    upper[n + k] = 1;
    rows.push_back({std::move(link), Sense::LessEq, r});
    rows.push_back({std::move(lower), Sense::LessEq, 0});
    rows.push_back({std::move(upper), Sense::LessEq, need + rng.rational(0, 2, 2)});
  }
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < base.num_rows(); ++i)
    if (base.senses()[i] == Sense::LessEq) ineq.push_back(i);
  if (!ineq.empty()) {
    Constraint c = rows[ineq[static_cast<std::size_t>(rng.integer(0, static_cast<long>(ineq.size()) - 1))]];
    c.rhs += rng.rational(0, 3, 2);
    rows.push_back(std::move(c));
  }
  return HPoly(space, rows);
}

AugmentationSpec random_augmentation_spec(Rng& rng, const HPoly& p1, const HPoly& p2, std::size_t q) {
  AugmentationSpec spec;
  spec.b1 = RatMatrix(q, p1.dim());
  spec.b2 = RatMatrix(q, p2.dim());
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p1.dim(); ++j) spec.b1(i, j) = rng.rational(-10, 10, 2);
    for (std::size_t j = 0; j < p2.dim(); ++j) spec.b2(i, j) = rng.rational(-10, 10, 2);
  }
  auto diag = [&rng](std::size_t k) {
    RatMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i) c(i, i) = rng.rational(1, 8, 2);
    return c;
  };
  spec.c1 = diag(p1.num_rows());
  spec.c2 = diag(p2.num_rows());
  return spec;
}

BlockInstance random_block_instance(Rng& rng) {
  for (;;) {
    const auto p = static_cast<std::size_t>(rng.integer(1, 3));
    const auto q = static_cast<std::size_t>(rng.integer(1, 3));
    const auto m = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min(p, q))));
    const HPoly x = random_polytope(rng, p, static_cast<std::size_t>(rng.integer(0, 2)), "x");
    const HPoly y = random_polytope(rng, q, static_cast<std::size_t>(rng.integer(0, 2)), "y");
    RatMatrix b(m, p), c(m, q);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < p; ++j) b(i, j) = rng.integer(-3, 3);
      for (std::size_t j = 0; j < q; ++j) c(i, j) = rng.integer(-3, 3);
    }
    if (rank(b) < m || rank(c) < m) continue;

    const VarSpace xy = x.space().concat(y.space());
    std::vector<Constraint> link;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational rhs = *maximize(x, b.row(i)).optimum + *maximize(y, c.row(i)).optimum + rng.rational(0, 2, 2);
      RatVector a = b.row(i);
      const RatVector ci = c.row(i);
      a.insert(a.end(), ci.begin(), ci.end());
      link.push_back({std::move(a), Sense::LessEq, rhs});
    }
    BlockInstance out{x, y, HPoly(xy, link), {}, {}, {}};
    const HPoly xa = x.embed(xy), yd = y.embed(xy);
    out.k1 = xa.with_rows(link);
    out.k2 = out.l.with_rows(yd.rows());
    out.k3 = out.k1.with_rows(yd.rows());
    return out;
  }
}

std::pair<HPoly, HPoly> random_lifted_pair(Rng& rng, bool extended) {
  const auto p = static_cast<std::size_t>(rng.integer(1, 3));
  const auto du = static_cast<std::size_t>(rng.integer(1, 3));
  const HPoly u = random_polytope(rng, du, static_cast<std::size_t>(rng.integer(0, 2)), "u");
  RatMatrix m(p, du);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < du; ++j) m(i, j) = rng.rational(-2, 2, 2);
  const RatVector c = random_vector(rng, p, -2, 2, 2);

  const VarSpace xs = VarSpace::of_class("x", p);
  const VarSpace space = xs.concat(u.space());
  HPoly p2 = u.embed(space);
  std::vector<Constraint> graph;
  for (std::size_t i = 0; i < p; ++i) {
    RatVector a(p + du);
    a[i] = 1;
    for (std::size_t j = 0; j < du; ++j) a[p + j] = -m(i, j);
    graph.push_back({std::move(a), Sense::Equal, c[i]});
  }
  p2 = HPoly(space, graph).with_rows(p2.rows());

  if (!extended) return {random_polytope(rng, p, static_cast<std::size_t>(rng.integer(0, 2)), "x"), p2};
  std::vector<RatVector> image;
  const VPoly verts = enumerate_vertices(u);
  for (const auto& v : verts.vertices()) {
    RatVector x = m * v;
    for (std::size_t i = 0; i < p; ++i) x[i] += c[i];
    image.push_back(std::move(x));
  }
  return {hull(VPoly(xs, std::move(image))), p2};
}

}  // namespace efpoly
