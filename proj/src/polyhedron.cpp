#include "efpoly/polyhedron.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"

namespace efpoly {

namespace {

// Fixed-size bitset over constraint indices.
class RowSet {
 public:
  explicit RowSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  RowSet operator&(const RowSet& o) const {
    RowSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  bool contains_all(const RowSet& sub) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((sub.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVector v;
  RowSet zeros;
};

Rational row_dot(const RatMatrix& m, std::size_t r, const RatVector& x) {
  Rational s;
  auto row = m.row_span(r);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!row[j].is_zero() && !x[j].is_zero()) s.add_mul(row[j], x[j]);
  return s;
}

// Greedy choice of linearly independent rows, in index order.
std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  const std::size_t d = m.cols();
  std::vector<RatVector> basis;
  std::vector<std::size_t> pivot_col, chosen;
  for (std::size_t r = 0; r < m.rows() && chosen.size() < d; ++r) {
    RatVector v = m.row(r);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = v[pivot_col[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!basis[k][j].is_zero()) v[j].sub_mul(f, basis[k][j]);
    }
    std::size_t p = d;
    for (std::size_t j = 0; j < d; ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p == d) continue;
    const Rational inv = v[p].reciprocal();
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    pivot_col.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

RatVector combine(const Rational& a, const RatVector& x, const Rational& b, const RatVector& y) {
  RatVector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!x[j].is_zero()) out[j].add_mul(a, x[j]);
    if (!y[j].is_zero()) out[j].add_mul(b, y[j]);
  }
  return primitive_integer(out);
}

HPoly recession_cone(const HPoly& p) {
  return HPoly(p.space(), p.a(), RatVector(p.num_rows()), p.senses());
}

HPoly aligned(const HPoly& q, const VarSpace& space) {
  if (q.space() == space) return q;
  if (q.dim() != space.size() || !q.space().is_subset_of(space))
    throw DimensionMismatch("polyhedra live in different variable spaces");
  return q.embed(space);
}

}  // namespace

bool contains(const HPoly& p, const RatVector& x) {
  if (x.size() != p.dim())
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, polyhedron has " +
                            std::to_string(p.dim()));
  for (std::size_t r = 0; r < p.num_rows(); ++r) {
    const Rational lhs = row_dot(p.a(), r, x);
    if (p.senses()[r] == Sense::Equal ? lhs != p.b()[r] : lhs > p.b()[r]) return false;
  }
  return true;
}

BoundednessCheck is_bounded(const HPoly& p) {
  if (is_empty(p).empty) throw EmptyPolyhedron("is_bounded: polyhedron is empty");
  const std::size_t n = p.dim();
  const HPoly rec = recession_cone(p);
  // Coordinate directions first: they give the most readable certificates.
  for (std::size_t j = 0; j < n; ++j)
    for (int s : {1, -1}) {
      RatVector e(n);
      e[j] = s;
      if (contains(rec, e)) return {false, e};
    }
  std::vector<Constraint> box;
  for (std::size_t j = 0; j < n; ++j)
    for (int s : {1, -1}) {
      RatVector e(n);
      e[j] = s;
      box.push_back({e, Sense::LessEq, 1});
    }
  const HPoly boxed = rec.with_rows(box);
  for (std::size_t j = 0; j < n; ++j)
    for (int s : {1, -1}) {
      RatVector c(n);
      c[j] = s;
      auto out = maximize(boxed, c);
      if (out.status != LpStatus::Optimal) throw InternalError("is_bounded: box LP not optimal");
      if (out.optimum->sign() > 0) return {false, primitive_integer(*out.point)};
    }
  return {true, {}};
}

std::vector<RatVector> extreme_rays(const RatMatrix& m) {
  const std::size_t d = m.cols();
  const std::size_t rows = m.rows();
  if (d == 0) return {};
  const auto init = independent_rows(m);
  if (init.size() < d) throw PreconditionViolation("extreme_rays: cone is not pointed");

  // Simplicial start: ray j is tight on every initial row except the j-th.
  RatMatrix mi(0, d);
  for (auto r : init) mi.append_row(m.row(r));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVector rhs(d);
    rhs[j] = -1;
    auto sol = solve_linear(mi, rhs);
    if (!sol) throw InternalError("extreme_rays: initial basis is singular");
    Ray ray{primitive_integer(sol->particular), RowSet(rows)};
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) ray.zeros.set(init[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(rows, false);
  for (auto r : init) done[r] = true;
  for (std::size_t h = 0; h < rows; ++h) {
    if (done[h]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = row_dot(m, h, rays[i].v);
      const int s = val[i].sign();
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (pos.empty()) {
      for (auto i : zero) rays[i].zeros.set(h);
      continue;
    }
    std::vector<Ray> next;
    for (auto i : pos) {
      for (auto k : neg) {
        const RowSet common = rays[i].zeros & rays[k].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != i && o != k && rays[o].zeros.contains_all(common)) adjacent = false;
        if (!adjacent) continue;
        // val[i] > 0 > val[k]: the combination is tight on row h.
        Ray nr{combine(val[i], rays[k].v, -val[k], rays[i].v), common};
        nr.zeros.set(h);
        next.push_back(std::move(nr));
      }
    }
    for (auto i : zero) {
      rays[i].zeros.set(h);
      next.push_back(std::move(rays[i]));
    }
    for (auto k : neg) next.push_back(std::move(rays[k]));
    rays = std::move(next);
    done[h] = true;
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

VPoly enumerate_vertices(const HPoly& p) {
  if (is_empty(p).empty) return VPoly(p.space(), {});
  const auto bc = is_bounded(p);
  if (!bc.bounded) throw UnboundedPolyhedron("enumerate_vertices: polyhedron is unbounded", bc.ray);

  const std::size_t n = p.dim();
  RatMatrix eq(0, n);
  RatVector eq_rhs;
  std::vector<std::size_t> ineq;
  for (std::size_t r = 0; r < p.num_rows(); ++r) {
    if (p.senses()[r] == Sense::Equal) {
      eq.append_row(p.a().row(r));
      eq_rhs.push_back(p.b()[r]);
    } else {
      ineq.push_back(r);
    }
  }
  // x = x0 + N t with t free.
  RatVector x0(n);
  std::vector<RatVector> basis;
  if (eq.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      RatVector e(n);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    auto sol = solve_linear(eq, eq_rhs);
    if (!sol) throw InternalError("enumerate_vertices: equalities inconsistent on a non-empty polyhedron");
    x0 = std::move(sol->particular);
    basis = std::move(sol->nullspace);
  }
  const std::size_t k = basis.size();
  if (k == 0) return VPoly(p.space(), {x0});

  // Homogenised cone {(t, s) : A N t - (b - A x0) s <= 0, s >= 0}.
  RatMatrix cone(0, k + 1);
  for (auto r : ineq) {
    RatVector row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = row_dot(p.a(), r, basis[j]);
    row[k] = row_dot(p.a(), r, x0) - p.b()[r];
    cone.append_row(row);
  }
  RatVector srow(k + 1);
  srow[k] = -1;
  cone.append_row(srow);

  std::vector<RatVector> verts;
  for (const auto& ray : extreme_rays(cone)) {
    if (ray[k].sign() <= 0) throw InternalError("enumerate_vertices: recession ray in a bounded polyhedron");
    RatVector x = x0;
    for (std::size_t j = 0; j < k; ++j) {
      if (ray[j].is_zero()) continue;
      const Rational t = ray[j] / ray[k];
      for (std::size_t i = 0; i < n; ++i)
        if (!basis[j][i].is_zero()) x[i].add_mul(t, basis[j][i]);
    }
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  return VPoly(p.space(), std::move(verts));
}

VPoly enumerate_vertices_bruteforce(const HPoly& p) {
  const std::size_t d = p.dim();
  const std::size_t m = p.num_rows();
  if (is_empty(p).empty) return VPoly(p.space(), {});
  const auto bc = is_bounded(p);
  if (!bc.bounded) throw UnboundedPolyhedron("enumerate_vertices_bruteforce: polyhedron is unbounded", bc.ray);
  if (d == 0) return VPoly(p.space(), {RatVector{}});

  std::vector<RatVector> verts;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (d <= m) {
    RatMatrix a(0, d);
    RatVector b;
    for (auto r : pick) {
      a.append_row(p.a().row(r));
      b.push_back(p.b()[r]);
    }
    auto sol = solve_linear(a, b);
    if (sol && sol->nullspace.empty() && contains(p, sol->particular) &&
        std::find(verts.begin(), verts.end(), sol->particular) == verts.end())
      verts.push_back(std::move(sol->particular));
    // next combination
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  return VPoly(p.space(), std::move(verts));
}

HPoly hull(const VPoly& v) {
  if (v.empty()) throw PreconditionViolation("hull: no vertices");
  const std::size_t n = v.dim();
  const RatVector& base = v.vertices().front();
  RatMatrix diff(0, n);
  for (std::size_t i = 1; i < v.size(); ++i) {
    RatVector d = v.vertices()[i];
    for (std::size_t j = 0; j < n; ++j) d[j] -= base[j];
    diff.append_row(d);
  }
  const auto rr = rref(diff);
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivots) is_pivot[c] = true;

  std::vector<Constraint> rows;
  // Affine hull: one equality per non-pivot coordinate.
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector c(n);
    c[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) c[rr.pivots[i]] = -rr.matrix(i, f);
    const Rational rhs = dot(c, base);
    rows.push_back(Constraint{c, Sense::Equal, rhs}.normalized());
  }

  const std::size_t r = rr.pivots.size();
  if (r > 0) {
    // Facets a.t <= beta of the points restricted to the pivot coordinates
    // are the extreme rays of {(a, beta) : a.t_i - beta <= 0}.
    RatMatrix cone(0, r + 1);
    for (const auto& x : v.vertices()) {
      RatVector row(r + 1);
      for (std::size_t i = 0; i < r; ++i) row[i] = x[rr.pivots[i]];
      row[r] = -1;
      cone.append_row(row);
    }
    std::vector<Constraint> facets;
    for (const auto& ray : extreme_rays(cone)) {
      RatVector c(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < r; ++i) {
        c[rr.pivots[i]] = ray[i];
        nonzero = nonzero || !ray[i].is_zero();
      }
      if (!nonzero) continue;
      facets.push_back(Constraint{c, Sense::LessEq, ray[r]}.normalized());
    }
    std::sort(facets.begin(), facets.end(),
              [](const Constraint& a, const Constraint& b) { return lex_less(b.coeffs, a.coeffs); });
    rows.insert(rows.end(), facets.begin(), facets.end());
  }
  return HPoly(v.space(), rows);
}

bool includes(const HPoly& outer, const HPoly& inner) {
  if (!(outer.space() == inner.space())) throw DimensionMismatch("includes: spaces differ");
  if (is_empty(inner).empty) return true;
  const auto inner_rows = inner.rows();
  for (std::size_t r = 0; r < outer.num_rows(); ++r) {
    const Constraint row = outer.row(r);
    if (std::find(inner_rows.begin(), inner_rows.end(), row) != inner_rows.end()) continue;
    auto hi = maximize(inner, row.coeffs);
    if (hi.status != LpStatus::Optimal || *hi.optimum > row.rhs) return false;
    if (row.sense == Sense::Equal) {
      auto lo = solve(LinProgram(row.coeffs, inner));
      if (lo.status != LpStatus::Optimal || *lo.optimum < row.rhs) return false;
    }
  }
  return true;
}

bool poly_equal(const HPoly& p, const HPoly& q_in) {
  const HPoly q = aligned(q_in, p.space());
  const bool pe = is_empty(p).empty, qe = is_empty(q).empty;
  if (pe || qe) return pe && qe;
  if (is_bounded(p).bounded && is_bounded(q).bounded) {
    const VPoly vp = enumerate_vertices(p), vq = enumerate_vertices(q);
    for (const auto& x : vp.vertices())
      if (!contains(q, x)) return false;
    for (const auto& x : vq.vertices())
      if (!contains(p, x)) return false;
    return true;
  }
  return includes(p, q) && includes(q, p);
}

}  // namespace efpoly
