#include "efpoly/verification.hpp"

#include <algorithm>
#include <numeric>

#include "efpoly/ef_analysis.hpp"
#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/model_gen.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/projection.hpp"
#include "efpoly/random_models.hpp"
#include "efpoly/redundancy.hpp"
#include "efpoly/worked_examples.hpp"

namespace efpoly {

namespace {

class Recorder {
 public:
  explicit Recorder(CheckOutcome& out) : out_(out) {}

  void fact(const std::string& key, const std::string& value) { out_.facts.emplace_back(key, value); }
  void fact(const std::string& key, std::size_t value) { fact(key, std::to_string(value)); }

  bool require(bool ok, const std::string& what) {
    if (!ok) {
      out_.passed = false;
      fact("failed", what);
    }
    return ok;
  }

  // "<passed>/<total>" plus a failure when they differ
  void tally(const std::string& key, std::size_t passed, std::size_t total) {
    fact(key, std::to_string(passed) + "/" + std::to_string(total));
    require(passed == total, key);
  }

 private:
  CheckOutcome& out_;
};

std::string points(const std::vector<RatVector>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + to_string(pts[i]);
  return s;
}

// Every (n-1)-edge acyclic subset of K_n, lexicographically sorted.
std::vector<RatVector> spanning_trees(unsigned n) {
  const auto edges = complete_graph_edges(n);
  std::vector<RatVector> out;
  for (unsigned mask = 0; mask < (1U << edges.size()); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<unsigned> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](unsigned v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    RatVector x(edges.size());
    bool acyclic = true;
    for (std::size_t e = 0; e < edges.size() && acyclic; ++e) {
      if (!(mask & (1U << e))) continue;
      x[e] = 1;
      const unsigned a = find(edges[e].first), b = find(edges[e].second);
      acyclic = a != b;
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

HPoly reference_w() {
  const VarSpace s = VarSpace::of_class("x", 2).concat(VarSpace::of_class("w", 3)).concat(VarSpace::of_class("u", 2));
  std::vector<Constraint> rows = {
      {{14, 7, 0, 0, 0, 0, 0}, Sense::LessEq, 42},
      {{-1, 2, 5, -6, 7, -1, 0}, Sense::LessEq, 0},
      {{3, -4, -10, 9, -8, 0, -1}, Sense::LessEq, 0},
      {{0, 0, 36, -2, 0, 0, 0}, Sense::LessEq, 46},
      {{0, 0, Rational(59, 2), 0, Rational(1, 2), 0, 0}, Sense::LessEq, 42},
  };
  for (std::size_t j = 0; j < 7; ++j) {
    RatVector e(7);
    e[j] = -1;
    rows.push_back({e, Sense::LessEq, 0});
  }
  return HPoly(s, rows);
}

void independent_pair(Recorder& r, Rng&) {
  const VPoly pv = enumerate_vertices(indep_p());
  const VPoly qv = enumerate_vertices(indep_q());
  r.fact("p_vertices", points(pv.sorted_vertices()));
  r.fact("q_vertices", points(qv.sorted_vertices()));
  r.require(pv.sorted_vertices() == std::vector<RatVector>{{6, 0}}, "P vertex set");
  r.require(qv.sorted_vertices() == std::vector<RatVector>{{Rational(3, 2), Rational(9, 2)}, {6, 0}}, "Q vertex set");

  const auto py = project(indep_p_lifted(), {"y"});
  const auto qx = project(indep_q_lifted(), {"x"});
  r.fact("project_p_lifted_onto_y", py.describe());
  r.fact("project_q_lifted_onto_x", qx.describe());
  r.require(py.describe() == "FullSpace(2)" && qx.describe() == "FullSpace(2)", "lifted projections");
  r.require(independent_spaces(indep_p(), indep_q()), "independent_spaces(P, Q)");

  const auto d1 = check_ef(indep_p(), indep_q_lifted(), 1);
  const auto d2 = check_ef(indep_p(), indep_q(), 2, indep_map());
  const auto d3 = check_ef(indep_p(), indep_q(), 3);
  r.fact("def1", d1.holds(1) ? "holds" : "rejects");
  r.fact("def2_with_A", d2.holds(2) ? "holds" : "rejects");
  r.fact("def3", d3.holds(3) ? "holds" : "rejects");
  r.require(!d1.holds(1) && d2.holds(2) && !d3.holds(3), "definition verdicts");

  const auto cls = classify_relationship(indep_p(), indep_q(), {indep_map()});
  r.fact("classification", to_string(cls.tag));
  r.require(cls.tag == RelationTag::IllDefined, "classification");
}

void coupled_pair(Recorder& r, Rng&) {
  const HPoly w = construct_mutual_augmentation(coupled_p1(), coupled_p2(), coupled_spec());
  r.fact("w_rows", w.num_rows());
  r.require(w == reference_w(), "W matches the reference rows");
  const auto px = project(w, {"x"});
  const auto pw = project(w, {"w"});
  r.fact("project_w_onto_x", px.describe());
  r.fact("project_w_onto_w", pw.describe());
  r.require(px.kind == ProjectionResult::Kind::Polyhedron && poly_equal(px.poly, coupled_p1()), "projection onto x is P1");
  r.require(pw.kind == ProjectionResult::Kind::Polyhedron && poly_equal(pw.poly, coupled_p2()), "projection onto w is P2");
}

void block_claims(Recorder& r, Rng& rng) {
  const std::size_t total = 20;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const BlockInstance b = random_block_instance(rng);
    auto aug = [](const HPoly& base, const HPoly& cand) { return check_augmentation(base, cand).holds; };
    const bool xi = aug(b.x, b.k1) && !aug(b.l, b.k1) && !aug(b.y, b.k1);
    const bool xii = aug(b.y, b.k2) && !aug(b.l, b.k2) && !aug(b.x, b.k2);
    const bool xiii = aug(b.x, b.k3) && aug(b.y, b.k3) && !aug(b.l, b.k3);
    const bool xvii = !aug(b.x, b.l) && !aug(b.y, b.l);
    if (xi && xii && xiii && xvii) ++ok;
  }
  r.tally("instances", ok, total);
}

void overlap_invariance(Recorder& r, Rng& rng) {
  const std::size_t total = 100;
  std::size_t ok = 0, ef = 0;
  for (std::size_t t = 0; t < total; ++t) {
    auto [p1, p2] = random_lifted_pair(rng, t % 2 == 0);
    const HPoly p3 = random_augmentation(rng, p2, "v", static_cast<std::size_t>(rng.integer(1, 2)));
    if (overlap_augmentation_invariance(p1, p2, p3)) ++ok;
    if (check_ef(p1, p2, 1).holds(1)) ++ef;
  }
  r.tally("invariant", ok, total);
  r.fact("pairs_with_ef", ef);
  r.require(ef > 0 && ef < total, "both verdicts occur");
}

void independent_property(Recorder& r, Rng& rng) {
  const std::size_t total = 50;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const HPoly x = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), static_cast<std::size_t>(rng.integer(0, 3)), "x");
    const HPoly w = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), static_cast<std::size_t>(rng.integer(0, 3)), "w");
    bool good = independent_spaces(x, w);
    for (const auto& [target, cand] : {std::pair{x, w}, std::pair{w, x}}) {
      const auto v1 = check_ef(target, cand, 1);
      const auto v3 = check_ef(target, cand, 3);
      good = good && v1.projection->is_full_space() && !v1.holds(1) && !v3.holds(3);
    }
    if (good) ++ok;
  }
  r.tally("pairs", ok, total);
}

void augmentation_property(Recorder& r, Rng& rng) {
  const std::size_t total = 100;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const HPoly p1 = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), static_cast<std::size_t>(rng.integer(0, 2)), "x");
    const HPoly p2 = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), static_cast<std::size_t>(rng.integer(0, 2)), "w");
    const auto spec = random_augmentation_spec(rng, p1, p2, static_cast<std::size_t>(rng.integer(1, 3)));
    try {
      construct_mutual_augmentation(p1, p2, spec);
      ++ok;
    } catch (const InternalError&) {
    }
  }
  r.tally("constructions", ok, total);
}

void mstp(Recorder& r, Rng& rng) {
  for (unsigned n : {3U, 4U}) {
    const std::string tag = "n" + std::to_string(n) + "_";
    const auto edm = gen_mst_edmonds(n);
    const VPoly v = enumerate_vertices(edm.poly);
    r.fact(tag + "edmonds_vertices", v.size());
    r.require(all_binary(v) && v.sorted_vertices() == spanning_trees(n), tag + "vertices are the spanning trees");

    const HPoly q = gen_mst_martin(n);
    const auto px = project(q, {"x"});
    r.require(px.kind == ProjectionResult::Kind::Polyhedron && poly_equal(px.poly, edm.poly),
              tag + "flow model projects onto the subtour polytope");
    const HPoly qr = gen_mst_martin_reduced(n);
    r.require(independent_spaces(edm.poly, qr), tag + "independent_spaces(P, Q')");

    const AffineMapSpec sub = martin_substitution(n);
    std::size_t agree = 0;
    for (int t = 0; t < 10; ++t) {
      const RatVector c = random_vector(rng, sub.codomain().size(), -5, 10, 3);
      RatVector cq(q.dim());
      std::copy(c.begin(), c.end(), cq.begin());
      const auto a = solve(LinProgram(cq, q));
      const auto b = solve(LinProgram(sub.matrix().transpose() * c, qr));
      if (a.status == LpStatus::Optimal && b.status == LpStatus::Optimal && *a.optimum == *b.optimum) ++agree;
    }
    r.tally(tag + "lp_optima_agree", agree, 10);
  }
  r.require(enumerate_vertices(gen_mst_edmonds(3).poly).size() == 3, "3 spanning trees at n=3");
  r.require(enumerate_vertices(gen_mst_edmonds(4).poly).size() == 16, "16 spanning trees at n=4");

  const auto red = column_redundant(gen_mst_martin(3), "x");
  bool matches = red.has_value();
  if (red) {
    const AffineMapSpec sub = martin_substitution(3);
    const VPoly rv = enumerate_vertices(red->reduced);
    for (const auto& z : rv.vertices()) matches = matches && red->reconstruction.apply(z) == sub.apply(z);
    matches = matches && poly_equal(red->reduced, gen_mst_martin_reduced(3));
  }
  r.fact("column_redundant_x", matches ? "matches substitution" : "differs");
  r.require(matches, "column redundancy of x");
}

void tsp(Recorder& r, Rng&) {
  for (unsigned n : {3U, 4U, 5U}) {
    const std::string tag = "n" + std::to_string(n) + "_";
    std::size_t fact = 1;
    for (unsigned k = 2; k < n; ++k) fact *= k;
    const VPoly tours = gen_standard_tsp(n);
    const VPoly ap = enumerate_vertices(gen_alternate_tsp(n));
    r.fact(tag + "ap_vertices", ap.size());
    r.fact(tag + "tours", tours.size());
    r.require(ap.size() == fact && tours.size() == fact && all_binary(ap), tag + "counts");
    bool round = true;
    for (const auto& x : tours.vertices()) {
      const TourVector t = tour_from_vector(n, x);
      const AssignmentVector a = tour_to_assignment(t);
      round = round && assignment_to_tour(a) == t && ap.has_vertex(to_vector(a));
    }
    for (const auto& w : ap.vertices()) {
      const auto a = assignment_from_vector(n, w);
      round = round && tour_to_assignment(assignment_to_tour(a)) == a;
    }
    r.require(round, tag + "round trips");
  }
}

void pushforward(Recorder& r, Rng& rng) {
  const std::size_t total = 20;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const auto q = static_cast<std::size_t>(rng.integer(1, 3));
    const auto p = static_cast<std::size_t>(rng.integer(1, 3));
    const HPoly y = random_polytope(rng, q, static_cast<std::size_t>(rng.integer(0, 3)), "y");
    RatMatrix c(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) c(i, j) = rng.rational(0, 3, 2);
    const RatVector b = random_vector(rng, p, 0, 3, 2);
    const RatVector alpha = random_vector(rng, p, -3, 3, 2);

    const VarSpace xs = VarSpace::of_class("x", p).concat(y.space());
    std::vector<Constraint> link;
    for (std::size_t i = 0; i < p; ++i) {
      RatVector row(p + q);
      row[i] = 1;
      for (std::size_t j = 0; j < q; ++j) row[p + j] = -c(i, j);
      link.push_back({row, Sense::Equal, b[i]});
    }
    const HPoly graph = y.embed(xs).with_rows(link);
    RatVector obj(p + q);
    std::copy(alpha.begin(), alpha.end(), obj.begin());
    const auto lp1 = solve(LinProgram(obj, graph));
    const auto [cy, k] = pushforward_objective(alpha, AffineMapSpec(y.space(), VarSpace::of_class("x", p), c, b));
    const auto lp2 = solve(LinProgram(cy, y));
    if (lp1.status == LpStatus::Optimal && lp2.status == LpStatus::Optimal && *lp1.optimum == *lp2.optimum + k) ++ok;
  }
  r.tally("instances", ok, total);
}

void projection_oracle(Recorder& r, Rng& rng) {
  const std::size_t total = 50;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const auto dim = static_cast<std::size_t>(rng.integer(2, 5));
    const HPoly u = random_polytope(rng, dim, static_cast<std::size_t>(rng.integer(0, 4)), "x", rng.integer(0, 4) == 0);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < dim; ++j)
      if (rng.coin()) keep.push_back(j);
    if (keep.empty()) keep.push_back(static_cast<std::size_t>(rng.integer(0, static_cast<long>(dim) - 1)));
    const auto res = project_positions(u, keep);
    std::vector<RatVector> pts;
    const VPoly verts = enumerate_vertices(u);
    for (const auto& v : verts.vertices()) {
      RatVector k;
      for (auto j : keep) k.push_back(v[j]);
      pts.push_back(std::move(k));
    }
    if (res.kind == ProjectionResult::Kind::Polyhedron && poly_equal(res.poly, hull(VPoly(res.space, pts)))) ++ok;
  }
  r.tally("instances", ok, total);
}

void degenerate(Recorder& r, Rng& rng) {
  const std::size_t total = 30;
  std::size_t ok = 0, empties = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const auto xd = static_cast<std::size_t>(rng.integer(1, 3));
    const auto wd = static_cast<std::size_t>(rng.integer(1, 3));
    HPoly w = random_polytope(rng, wd, static_cast<std::size_t>(rng.integer(0, 2)), "w");
    if (rng.coin()) {
      // a row below the minimum of some direction makes the system infeasible
      RatVector a = random_vector(rng, wd, -3, 3);
      if (is_zero(a)) a[0] = 1;
      RatVector neg = a;
      for (auto& v : neg) v = -v;
      const Rational min_val = -*maximize(w, neg).optimum;
      w = w.with_rows({{a, Sense::LessEq, min_val - rng.rational(1, 3, 2)}});
    }
    const HPoly u = w.embed(VarSpace::of_class("x", xd).concat(w.space()));
    const auto d = project_degenerate_case(u, xd);
    const auto f = project(u, {"x"});
    bool good = d.kind == f.kind && d.kind != ProjectionResult::Kind::Polyhedron;
    if (d.is_empty()) {
      ++empties;
      good = good && is_farkas_certificate(u.a(), u.b(), u.senses(), d.witness) &&
             is_farkas_certificate(u.a(), u.b(), u.senses(), f.witness);
    } else {
      good = good && d.dim() == xd;
    }
    if (good) ++ok;
  }
  r.tally("systems", ok, total);
  r.fact("empty_systems", empties);
}

struct Entry {
  const char* name;
  const char* title;
  void (*run)(Recorder&, Rng&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"independent-pair", "independent pair P, Q: vertices, projections, definitions, classification", independent_pair},
      {"coupled-pair", "mutual augmentation W of P1 and P2", coupled_pair},
      {"block-claims", "augmentation claims for K1, K2, K3 and L on 20 random instances", block_claims},
      {"overlap-invariance", "augmenting a lift keeps its definition-1 verdict, 100 random triples", overlap_invariance},
      {"independent-property", "independent pairs are never EFs under definitions 1 and 3, 50 random pairs",
       independent_property},
      {"augmentation-property", "mutual augmentation projections verify, 100 random pairs", augmentation_property},
      {"mstp", "spanning tree models: subtour polytope, flow model, reduced flow model", mstp},
      {"tsp", "tour polytope and assignment polytope, n = 3, 4, 5", tsp},
      {"pushforward", "LP over the graph of x = C y + b equals the pushed-forward LP, 20 instances", pushforward},
      {"projection-oracle", "FM projection equals the hull of projected vertices, 50 polytopes", projection_oracle},
      {"degenerate", "zero x block: projection is the full space or empty, 30 systems", degenerate},
  };
  return all;
}

}  // namespace

std::vector<std::string> verification_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
  std::vector<CheckOutcome> out;
  const auto& all = entries();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!options.filter.empty() && std::string(all[i].name).find(options.filter) == std::string::npos) continue;
    CheckOutcome o{all[i].name, all[i].title, true, {}};
    Recorder rec(o);
    Rng rng(options.seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    try {
      all[i].run(rec, rng);
    } catch (const std::exception& e) {
      o.passed = false;
      rec.fact("error", e.what());
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace efpoly
