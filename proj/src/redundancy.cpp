#include "efpoly/redundancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/polyhedron.hpp"

namespace efpoly {

namespace detail {

bool row_implied(const HPoly& p, std::size_t row) {
  std::vector<std::size_t> others;
  for (std::size_t r = 0; r < p.num_rows(); ++r)
    if (r != row) others.push_back(r);
  const HPoly rest = p.select_rows(others);
  const Constraint c = p.row(row);
  auto hi = maximize(rest, c.coeffs);
  if (hi.status != LpStatus::Optimal || *hi.optimum > c.rhs) return false;
  if (c.sense == Sense::Equal) {
    auto lo = solve(LinProgram(c.coeffs, rest));
    if (lo.status != LpStatus::Optimal || *lo.optimum < c.rhs) return false;
  }
  return true;
}

}  // namespace detail

bool row_redundant(const HPoly& p, std::size_t row) {
  if (row >= p.num_rows()) throw std::out_of_range("row_redundant: row index out of range");
  if (is_empty(p).empty) throw EmptyPolyhedron("row_redundant: polyhedron is empty");
  return detail::row_implied(p, row);
}

HPoly remove_row_redundancy(const HPoly& p) {
  if (is_empty(p).empty) throw EmptyPolyhedron("remove_row_redundancy: polyhedron is empty");
  std::vector<std::size_t> alive(p.num_rows());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const auto at = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), i) - alive.begin());
    if (detail::row_implied(p.select_rows(alive), at)) alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return p.select_rows(alive);
}

std::optional<ColumnReduction> column_redundant(const HPoly& p, const std::string& drop_class) {
  const VarSpace& space = p.space();
  if (!space.has_class(drop_class))
    throw PreconditionViolation("column_redundant: class '" + drop_class + "' is not in the space");
  std::vector<std::string> kept_classes;
  for (const auto& c : space.classes())
    if (c != drop_class) kept_classes.push_back(c);
  if (kept_classes.empty()) throw PreconditionViolation("column_redundant: cannot drop the only class");
  if (is_empty(p).empty) throw EmptyPolyhedron("column_redundant: polyhedron is empty");

  const VPoly verts = enumerate_vertices(p);  // throws on unbounded p
  const auto kept = space.positions_of_classes(kept_classes);
  const auto dropped = space.positions_of_classes({drop_class});
  const std::size_t nk = kept.size();

  // Each dropped coordinate d: [v_K 1] (m_d, c_d) = v_d over all vertices.
  RatMatrix design(0, nk + 1);
  for (const auto& v : verts.vertices()) {
    RatVector row(nk + 1);
    for (std::size_t j = 0; j < nk; ++j) row[j] = v[kept[j]];
    row[nk] = 1;
    design.append_row(row);
  }
  RatMatrix m(dropped.size(), nk);
  RatVector offset(dropped.size());
  for (std::size_t d = 0; d < dropped.size(); ++d) {
    RatVector target;
    for (const auto& v : verts.vertices()) target.push_back(v[dropped[d]]);
    auto sol = solve_linear(design, target);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < nk; ++j) m(d, j) = sol->particular[j];
    offset[d] = sol->particular[nk];
  }

  const VarSpace kept_space = space.subspace(kept);
  AffineMapSpec recon(kept_space, space.subspace(dropped), m, offset);
  std::vector<RatVector> projected;
  for (const auto& v : verts.vertices()) {
    RatVector k(nk);
    for (std::size_t j = 0; j < nk; ++j) k[j] = v[kept[j]];
    projected.push_back(std::move(k));
  }
  const VPoly pv(kept_space, projected);
  HPoly reduced = hull(pv);

  // Two-way vertex correspondence.
  const VPoly rv = enumerate_vertices(reduced);
  if (rv.sorted_vertices() != pv.sorted_vertices() || rv.size() != verts.size())
    throw InternalError("column_redundant: reduced polytope lost a vertex");
  for (const auto& k : rv.vertices()) {
    const RatVector dv = recon.apply(k);
    RatVector full(space.size());
    for (std::size_t j = 0; j < nk; ++j) full[kept[j]] = k[j];
    for (std::size_t d = 0; d < dropped.size(); ++d) full[dropped[d]] = dv[d];
    if (!verts.has_vertex(full)) throw InternalError("column_redundant: reconstruction misses a vertex");
  }
  return ColumnReduction{std::move(recon), std::move(reduced)};
}

RedundancyReport redundancy_report(const HPoly& p) {
  if (is_empty(p).empty) throw EmptyPolyhedron("redundancy_report: polyhedron is empty");
  RedundancyReport rep;
  for (std::size_t r = 0; r < p.num_rows(); ++r)
    if (detail::row_implied(p, r)) rep.redundant_rows.push_back(r);
  const auto classes = p.space().classes();
  if (is_bounded(p).bounded) {
    rep.columns_checked = true;
    if (classes.size() > 1)
      for (const auto& c : classes)
        if (auto red = column_redundant(p, c)) rep.redundant_classes.emplace_back(c, std::move(red->reconstruction));
  }
  rep.minimal = rep.redundant_rows.empty() && rep.redundant_classes.empty();
  return rep;
}

}  // namespace efpoly
