#include "efpoly/model_gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "efpoly/errors.hpp"

namespace efpoly {

namespace {

void require_range(unsigned n, unsigned lo, unsigned hi, const char* what) {
  if (n < lo || n > hi)
    throw PreconditionViolation(std::string(what) + ": n must be in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(n));
}

VarSpace edge_space(unsigned n) {
  std::vector<Variable> vars;
  for (const auto& [i, j] : complete_graph_edges(n)) vars.push_back({"x", {i, j}});
  return VarSpace(vars);
}

VarSpace flow_space(unsigned n) {
  std::vector<Variable> vars;
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        if (i != j) vars.push_back({"z", {k, i, j}});
  return VarSpace(vars);
}

std::size_t pos(const VarSpace& s, const std::string& cls, std::vector<unsigned> idx) {
  auto p = s.position_of(Variable{cls, std::move(idx)});
  if (!p) throw InternalError("model generator: missing variable");
  return *p;
}

void add_nonneg(const VarSpace& s, std::vector<Constraint>& rows) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    RatVector e(s.size());
    e[j] = 1;
    rows.push_back({e, Sense::GreaterEq, 0});
  }
}

// Degree and root rows shared by both flow models.
void add_flow_degree_rows(unsigned n, const VarSpace& s, std::vector<Constraint>& rows) {
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned i = 1; i <= n; ++i) {
      if (i == k) continue;
      RatVector a(s.size());
      for (unsigned j = 1; j <= n; ++j)
        if (j != i) a[pos(s, "z", {k, i, j})] = 1;
      rows.push_back({a, Sense::LessEq, 1});
    }
  for (unsigned k = 1; k <= n; ++k) {
    RatVector a(s.size());
    for (unsigned j = 1; j <= n; ++j)
      if (j != k) a[pos(s, "z", {k, k, j})] = 1;
    rows.push_back({a, Sense::LessEq, 0});
  }
}

}  // namespace

std::vector<Edge> complete_graph_edges(unsigned n) {
  std::vector<Edge> e;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return e;
}

void TourVector::validate() const {
  if (n < 2 || arcs.size() != n) throw PreconditionViolation("tour: need exactly n arcs");
  std::vector<unsigned> succ(n + 1, 0), indeg(n + 1, 0);
  for (const auto& [i, j] : arcs) {
    if (i < 1 || i > n || j < 1 || j > n || i == j) throw PreconditionViolation("tour: bad arc");
    if (succ[i] != 0) throw PreconditionViolation("tour: city with two outgoing arcs");
    succ[i] = j;
    ++indeg[j];
  }
  for (unsigned c = 1; c <= n; ++c)
    if (indeg[c] != 1) throw PreconditionViolation("tour: city without exactly one incoming arc");
  unsigned c = 1, steps = 0;
  do {
    c = succ[c];
    ++steps;
  } while (c != 1 && steps <= n);
  if (steps != n) throw PreconditionViolation("tour: arcs form more than one cycle");
}

std::vector<unsigned> TourVector::visit_order() const {
  validate();
  std::vector<unsigned> succ(n + 1, 0);
  for (const auto& [i, j] : arcs) succ[i] = j;
  std::vector<unsigned> order;
  for (unsigned c = succ[1]; c != 1; c = succ[c]) order.push_back(c);
  return order;
}

bool operator==(const TourVector& a, const TourVector& b) {
  auto x = a.arcs, y = b.arcs;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return a.n == b.n && x == y;
}

void AssignmentVector::validate() const {
  if (n < 2 || w.size() != n - 1) throw PreconditionViolation("assignment: need n-1 rows");
  std::vector<int> col(n - 1, 0);
  for (const auto& row : w) {
    if (row.size() != n - 1) throw PreconditionViolation("assignment: need n-1 columns");
    int sum = 0;
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] != 0 && row[t] != 1) throw PreconditionViolation("assignment: entries must be 0 or 1");
      sum += row[t];
      col[t] += row[t];
    }
    if (sum != 1) throw PreconditionViolation("assignment: row sum is not 1");
  }
  for (int c : col)
    if (c != 1) throw PreconditionViolation("assignment: column sum is not 1");
}

VarSpace tsp_arc_space(unsigned n) {
  std::vector<Variable> vars;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j) vars.push_back({"x", {i, j}});
  return VarSpace(vars);
}

VarSpace assignment_space(unsigned n) {
  std::vector<Variable> vars;
  for (unsigned i = 2; i <= n; ++i)
    for (unsigned t = 1; t < n; ++t) vars.push_back({"w", {i, t}});
  return VarSpace(vars);
}

RatVector to_vector(const TourVector& t) {
  t.validate();
  const VarSpace s = tsp_arc_space(t.n);
  RatVector x(s.size());
  for (const auto& [i, j] : t.arcs) x[pos(s, "x", {i, j})] = 1;
  return x;
}

TourVector tour_from_vector(unsigned n, const RatVector& x) {
  const VarSpace s = tsp_arc_space(n);
  if (x.size() != s.size()) throw DimensionMismatch("tour vector has wrong length");
  TourVector t{n, {}};
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (x[p] == Rational(1)) {
      t.arcs.emplace_back(s[p].index[0], s[p].index[1]);
    } else if (!x[p].is_zero()) {
      throw PreconditionViolation("tour vector entries must be 0 or 1");
    }
  }
  t.validate();
  return t;
}

RatVector to_vector(const AssignmentVector& a) {
  a.validate();
  RatVector w;
  for (const auto& row : a.w)
    for (int v : row) w.emplace_back(v);
  return w;
}

AssignmentVector assignment_from_vector(unsigned n, const RatVector& w) {
  if (n < 2 || w.size() != static_cast<std::size_t>(n - 1) * (n - 1))
    throw DimensionMismatch("assignment vector has wrong length");
  AssignmentVector a{n, std::vector<std::vector<int>>(n - 1, std::vector<int>(n - 1, 0))};
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == Rational(1)) {
      a.w[p / (n - 1)][p % (n - 1)] = 1;
    } else if (!w[p].is_zero()) {
      throw PreconditionViolation("assignment vector entries must be 0 or 1");
    }
  }
  a.validate();
  return a;
}

AssignmentVector tour_to_assignment(const TourVector& t) {
  const auto order = t.visit_order();
  AssignmentVector a{t.n, std::vector<std::vector<int>>(t.n - 1, std::vector<int>(t.n - 1, 0))};
  for (std::size_t step = 0; step < order.size(); ++step) a.w[order[step] - 2][step] = 1;
  return a;
}

TourVector assignment_to_tour(const AssignmentVector& a) {
  a.validate();
  std::vector<unsigned> at_time(a.n - 1);
  for (std::size_t i = 0; i < a.w.size(); ++i)
    for (std::size_t t = 0; t < a.w[i].size(); ++t)
      if (a.w[i][t] == 1) at_time[t] = static_cast<unsigned>(i + 2);
  TourVector tour{a.n, {}};
  unsigned prev = 1;
  for (unsigned c : at_time) {
    tour.arcs.emplace_back(prev, c);
    prev = c;
  }
  tour.arcs.emplace_back(prev, 1);
  tour.validate();
  return tour;
}

VPoly gen_standard_tsp(unsigned n) {
  require_range(n, 3, 6, "gen_standard_tsp");
  std::vector<unsigned> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 2U);
  std::vector<RatVector> verts;
  do {
    TourVector t{n, {}};
    unsigned prev = 1;
    for (unsigned c : perm) {
      t.arcs.emplace_back(prev, c);
      prev = c;
    }
    t.arcs.emplace_back(prev, 1);
    verts.push_back(to_vector(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VPoly(tsp_arc_space(n), std::move(verts));
}

HPoly gen_alternate_tsp(unsigned n) {
  if (n < 3) throw PreconditionViolation("gen_alternate_tsp: n must be at least 3");
  const VarSpace s = assignment_space(n);
  std::vector<Constraint> rows;
  for (unsigned i = 2; i <= n; ++i) {
    RatVector a(s.size());
    for (unsigned t = 1; t < n; ++t) a[pos(s, "w", {i, t})] = 1;
    rows.push_back({a, Sense::Equal, 1});
  }
  for (unsigned t = 1; t < n; ++t) {
    RatVector a(s.size());
    for (unsigned i = 2; i <= n; ++i) a[pos(s, "w", {i, t})] = 1;
    rows.push_back({a, Sense::Equal, 1});
  }
  add_nonneg(s, rows);
  return HPoly(s, rows);
}

EdmondsModel gen_mst_edmonds(unsigned n, std::optional<RatVector> costs) {
  require_range(n, 3, 5, "gen_mst_edmonds");
  const auto edges = complete_graph_edges(n);
  const VarSpace s = edge_space(n);
  RatVector c = costs.value_or(RatVector(edges.size(), Rational(1)));
  if (c.size() != edges.size()) throw DimensionMismatch("gen_mst_edmonds: one cost per edge expected");

  std::vector<Constraint> rows;
  rows.push_back({RatVector(edges.size(), Rational(1)), Sense::Equal, static_cast<long>(n) - 1});
  for (unsigned size = 2; size < n; ++size) {
    // subsets of {1..n} with `size` elements, lexicographic
    std::vector<unsigned> sub(size);
    std::iota(sub.begin(), sub.end(), 1U);
    for (;;) {
      RatVector a(edges.size());
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const bool in_i = std::find(sub.begin(), sub.end(), edges[e].first) != sub.end();
        const bool in_j = std::find(sub.begin(), sub.end(), edges[e].second) != sub.end();
        if (in_i && in_j) a[e] = 1;
      }
      rows.push_back({a, Sense::LessEq, static_cast<long>(size) - 1});
      std::size_t k = size;
      while (k > 0 && sub[k - 1] == n - size + k) --k;
      if (k == 0) break;
      ++sub[k - 1];
      for (std::size_t m = k; m < size; ++m) sub[m] = sub[m - 1] + 1;
    }
  }
  add_nonneg(s, rows);
  HPoly p(s, rows);
  LinProgram lp(c, p);
  return {std::move(p), std::move(lp)};
}

HPoly gen_mst_martin(unsigned n) {
  require_range(n, 3, 5, "gen_mst_martin");
  const auto edges = complete_graph_edges(n);
  const VarSpace s = edge_space(n).concat(flow_space(n));
  std::vector<Constraint> rows;
  RatVector sum(s.size());
  for (std::size_t e = 0; e < edges.size(); ++e) sum[e] = 1;
  rows.push_back({sum, Sense::Equal, static_cast<long>(n) - 1});
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& [i, j] : edges) {
      RatVector a(s.size());
      a[pos(s, "z", {k, i, j})] = 1;
      a[pos(s, "z", {k, j, i})] = 1;
      a[pos(s, "x", {i, j})] = -1;
      rows.push_back({a, Sense::Equal, 0});
    }
  add_flow_degree_rows(n, s, rows);
  add_nonneg(s, rows);
  return HPoly(s, rows);
}

unsigned martin_root(unsigned n, const Edge& e) {
  for (unsigned r = 1; r <= n; ++r)
    if (r != e.first && r != e.second) return r;
  throw PreconditionViolation("martin_root: every city is an end of the edge (n < 3)");
}

HPoly gen_mst_martin_reduced(unsigned n) {
  if (n < 3) throw PreconditionViolation("gen_mst_martin_reduced: n must be at least 3");
  require_range(n, 3, 5, "gen_mst_martin_reduced");
  const auto edges = complete_graph_edges(n);
  const VarSpace s = flow_space(n);
  std::vector<Constraint> rows;
  RatVector sum(s.size());
  for (const auto& e : edges) {
    const unsigned r = martin_root(n, e);
    sum[pos(s, "z", {r, e.first, e.second})] += 1;
    sum[pos(s, "z", {r, e.second, e.first})] += 1;
  }
  rows.push_back({sum, Sense::Equal, static_cast<long>(n) - 1});
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& e : edges) {
      const unsigned r = martin_root(n, e);
      if (k == r) continue;
      RatVector a(s.size());
      a[pos(s, "z", {k, e.first, e.second})] = 1;
      a[pos(s, "z", {k, e.second, e.first})] = 1;
      a[pos(s, "z", {r, e.first, e.second})] = -1;
      a[pos(s, "z", {r, e.second, e.first})] = -1;
      rows.push_back({a, Sense::Equal, 0});
    }
  add_flow_degree_rows(n, s, rows);
  add_nonneg(s, rows);
  return HPoly(s, rows);
}

AffineMapSpec martin_substitution(unsigned n) {
  require_range(n, 3, 5, "martin_substitution");
  const auto edges = complete_graph_edges(n);
  const VarSpace zs = flow_space(n), xs = edge_space(n);
  RatMatrix m(xs.size(), zs.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const unsigned r = martin_root(n, edges[e]);
    m(e, pos(zs, "z", {r, edges[e].first, edges[e].second})) = 1;
    m(e, pos(zs, "z", {r, edges[e].second, edges[e].first})) = 1;
  }
  return AffineMapSpec(zs, xs, std::move(m));
}

}  // namespace efpoly
