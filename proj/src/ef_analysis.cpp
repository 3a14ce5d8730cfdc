#include "efpoly/ef_analysis.hpp"

#include <algorithm>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/polyhedron.hpp"

namespace efpoly {

namespace {

std::vector<std::size_t> positions_in(const VarSpace& outer, const VarSpace& inner) {
  std::vector<std::size_t> pos;
  pos.reserve(inner.size());
  for (const auto& v : inner.variables()) {
    auto p = outer.position_of(v);
    if (!p) throw DimensionMismatch("variable " + v.name() + " is not in the enclosing space");
    pos.push_back(*p);
  }
  return pos;
}

bool same_variables(const VarSpace& a, const VarSpace& b) {
  return a.size() == b.size() && a.is_subset_of(b);
}

bool is_sign_row(const Constraint& c) {
  if (c.sense != Sense::LessEq || !c.rhs.is_zero()) return false;
  int nonzero = 0;
  for (const auto& v : c.coeffs) {
    if (v.is_zero()) continue;
    if (v.sign() > 0) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

// cand = lambda * base for some lambda > 0 (lambda != 0 for equalities).
bool scaled_copy(const Constraint& base, const Constraint& cand) {
  if (base.sense != cand.sense) return false;
  auto lead = std::find_if(base.coeffs.begin(), base.coeffs.end(), [](const Rational& v) { return !v.is_zero(); });
  if (lead == base.coeffs.end()) return base == cand;
  const auto j = static_cast<std::size_t>(lead - base.coeffs.begin());
  const Rational lambda = cand.coeffs[j] / base.coeffs[j];
  if (lambda.is_zero() || (base.sense != Sense::Equal && lambda.sign() < 0)) return false;
  for (std::size_t k = 0; k < base.coeffs.size(); ++k)
    if (cand.coeffs[k] != lambda * base.coeffs[k]) return false;
  return cand.rhs == lambda * base.rhs;
}

Constraint scaled(Constraint c, const Rational& f) {
  for (auto& v : c.coeffs) v *= f;
  c.rhs *= f;
  return c;
}

bool is_whole_space(const HPoly& p) {
  for (const auto& r : p.rows()) {
    if (!is_zero(r.coeffs)) return false;
    if (r.sense == Sense::Equal ? !r.rhs.is_zero() : r.rhs.sign() < 0) return false;
  }
  return true;
}

HPoly empty_hpoly(const VarSpace& s) { return HPoly(s, {{RatVector(s.size()), Sense::LessEq, -1}}); }

// Some point of `base` (non-empty) outside `cover`, both over the same space.
std::optional<RatVector> uncovered_point(const HPoly& base, const HPoly& cover) {
  for (const auto& row : cover.rows()) {
    const int dirs = row.sense == Sense::Equal ? 2 : 1;
    for (int d = 0; d < dirs; ++d) {
      RatVector c = row.coeffs;
      Rational limit = row.rhs;
      if (d == 1) {
        for (auto& v : c) v = -v;
        limit = -limit;
      }
      const LpOutcome out = maximize(base, c);
      if (out.status == LpStatus::Infeasible) throw EmptyPolyhedron("uncovered_point: base is empty");
      if (out.status == LpStatus::Optimal) {
        if (*out.optimum > limit) return *out.point;
        continue;
      }
      // unbounded: walk along the ray until the row is violated
      RatVector x = *out.point;
      const RatVector& ray = *out.ray;
      const Rational step = (limit - dot(c, x)) / dot(c, ray) + 1;
      if (step.sign() > 0)
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += step * ray[k];
      return x;
    }
  }
  return std::nullopt;
}

// A point violating some row of p, or nullopt when p is the whole space.
std::optional<RatVector> point_outside(const HPoly& p) {
  for (const auto& r : p.rows()) {
    const Rational norm = dot(r.coeffs, r.coeffs);
    if (norm.is_zero()) {
      if (r.sense == Sense::Equal ? !r.rhs.is_zero() : r.rhs.sign() < 0) return RatVector(p.dim());
      continue;
    }
    RatVector x = r.coeffs;
    const Rational f = (r.rhs + 1) / norm;
    for (auto& v : x) v *= f;
    return x;
  }
  return std::nullopt;
}

bool projection_equals(const ProjectionResult& r, const HPoly& target) {
  switch (r.kind) {
    case ProjectionResult::Kind::Empty: return is_empty(target).empty;
    case ProjectionResult::Kind::FullSpace: return is_whole_space(target);
    case ProjectionResult::Kind::Polyhedron: return poly_equal(r.poly, target);
  }
  return false;
}

HPoly as_hpoly(const VPoly& v) { return v.empty() ? empty_hpoly(v.space()) : hull(v); }

ProjectionResult project_onto(const HPoly& target, const HPoly& candidate) {
  const VarSpace u = union_space(candidate.space(), target.space());
  return project_positions(candidate.embed(u), positions_in(u, target.space()));
}

void run_def1(EFVerdict& v, const HPoly& target, const HPoly& candidate) {
  if (!v.projection) v.projection = project_onto(target, candidate);
  v.def1 = projection_equals(*v.projection, target);
  if (!*v.def1) v.notes.push_back("projection = " + v.projection->describe());
}

void run_def3(EFVerdict& v, const HPoly& target, const HPoly& candidate) {
  if (!v.projection) v.projection = project_onto(target, candidate);
  const ProjectionResult& r = *v.projection;
  const bool target_empty = is_empty(target).empty;

  // x in target => some w extends x
  std::optional<RatVector> unextended;
  if (!target_empty) {
    if (r.kind == ProjectionResult::Kind::Empty)
      unextended = is_empty(target).certificate;
    else if (r.kind == ProjectionResult::Kind::Polyhedron)
      unextended = uncovered_point(target, r.poly.embed(target.space()));
  }
  // some w extends x => x in target
  std::optional<RatVector> outside;
  if (r.kind == ProjectionResult::Kind::FullSpace)
    outside = point_outside(target);
  else if (r.kind == ProjectionResult::Kind::Polyhedron) {
    const HPoly proj = r.poly.embed(target.space());
    outside = target_empty ? is_empty(proj).certificate : uncovered_point(proj, target);
  }

  v.def3 = !unextended && !outside;
  if (outside) {
    v.counterexample = *outside;
    v.notes.push_back("x = " + to_string(*outside) + " is outside the target but extends to the candidate");
  } else if (unextended) {
    v.counterexample = *unextended;
    v.notes.push_back("x = " + to_string(*unextended) + " is in the target but does not extend");
  }
}

void run_def2(EFVerdict& v, const HPoly& target, const HPoly& candidate, const std::optional<AffineMapSpec>& witness) {
  if (!witness) throw PreconditionViolation("check_ef: definition 2 needs a witness map");
  if (!same_variables(witness->domain(), candidate.space()))
    throw DimensionMismatch("check_ef: map domain does not match the candidate's variables");
  if (!same_variables(witness->codomain(), target.space()))
    throw DimensionMismatch("check_ef: map codomain does not match the target's variables");
  v.def2_checked = true;

  const VPoly verts = enumerate_vertices(candidate.embed(witness->domain()));
  bool ok = false;
  if (verts.empty()) {
    ok = is_empty(target).empty;
  } else {
    std::vector<RatVector> images;
    images.reserve(verts.size());
    for (const auto& x : verts.vertices()) images.push_back(witness->apply(x));
    ok = poly_equal(target, hull(VPoly(witness->codomain(), std::move(images))));
  }
  if (ok)
    v.def2 = *witness;
  else
    v.notes.push_back("image of the candidate under the map differs from the target");
}

void run_def(EFVerdict& v, const HPoly& target, const HPoly& candidate, int definition,
             const std::optional<AffineMapSpec>& witness) {
  switch (definition) {
    case 1: run_def1(v, target, candidate); return;
    case 2: run_def2(v, target, candidate, witness); return;
    case 3: run_def3(v, target, candidate); return;
    default: throw PreconditionViolation("check_ef: definition must be 1, 2 or 3");
  }
}

}  // namespace

bool independent_spaces(const VarSpace& p, const VarSpace& q) { return !share_class(p, q); }

bool independent_spaces(const HPoly& p, const HPoly& q) {
  if (!independent_spaces(p.space(), q.space())) return false;
  if (is_empty(p).empty || is_empty(q).empty) return true;
  const VarSpace u = union_space(p.space(), q.space());
  const auto pq = project_positions(p.embed(u), positions_in(u, q.space()));
  const auto qp = project_positions(q.embed(u), positions_in(u, p.space()));
  if (!pq.is_full_space() || !qp.is_full_space())
    throw InternalError("independent_spaces: disjoint labels but a projection is " +
                        (pq.is_full_space() ? qp : pq).describe());
  return true;
}

bool independent_spaces(const VPoly& p, const VPoly& q) { return independent_spaces(as_hpoly(p), as_hpoly(q)); }
bool independent_spaces(const HPoly& p, const VPoly& q) { return independent_spaces(p, as_hpoly(q)); }
bool independent_spaces(const VPoly& p, const HPoly& q) { return independent_spaces(as_hpoly(p), q); }

std::string to_string(AugmentationCheck::Reason r) {
  switch (r) {
    case AugmentationCheck::Reason::Holds: return "holds";
    case AugmentationCheck::Reason::NotByConstruction: return "not an augmentation by construction";
    case AugmentationCheck::Reason::CutsBase: return "added rows cut the base";
  }
  return "?";
}

AugmentationCheck check_augmentation(const HPoly& base, const HPoly& candidate) {
  if (is_empty(base).empty) throw EmptyPolyhedron("check_augmentation: base is empty");
  AugmentationCheck out;
  for (const auto& v : base.space().variables()) {
    if (!candidate.space().position_of(v)) {
      out.detail = "variable " + v.name() + " of the base is missing from the candidate";
      return out;
    }
  }
  const HPoly lifted = base.embed(candidate.space());
  const auto cand_rows = candidate.rows();
  for (std::size_t i = 0; i < lifted.num_rows(); ++i) {
    const Constraint r = lifted.row(i);
    if (std::none_of(cand_rows.begin(), cand_rows.end(), [&](const Constraint& c) { return scaled_copy(r, c); })) {
      out.detail = "base row " + std::to_string(i) + " has no counterpart in the candidate";
      return out;
    }
  }

  const ProjectionResult r = project_positions(candidate, positions_in(candidate.space(), base.space()));
  std::optional<RatVector> cut;
  if (r.is_empty())
    cut = is_empty(base).certificate;
  else if (r.kind == ProjectionResult::Kind::Polyhedron)
    cut = uncovered_point(base, r.poly.embed(base.space()));
  if (cut) {
    out.reason = AugmentationCheck::Reason::CutsBase;
    out.witness = *cut;
    out.detail = "base point " + to_string(*cut) + " does not extend";
    return out;
  }
  out.holds = true;
  out.reason = AugmentationCheck::Reason::Holds;
  return out;
}

HPoly construct_mutual_augmentation(const HPoly& p1, const HPoly& p2, const AugmentationSpec& spec) {
  if (share_class(p1.space(), p2.space()))
    throw PreconditionViolation("construct_mutual_augmentation: spaces must be independent");
  if (is_empty(p1).empty) throw EmptyPolyhedron("construct_mutual_augmentation: p1 is empty");
  if (is_empty(p2).empty) throw EmptyPolyhedron("construct_mutual_augmentation: p2 is empty");
  const std::size_t n1 = p1.dim(), n2 = p2.dim(), q = spec.slack_count();
  if (q == 0) throw PreconditionViolation("construct_mutual_augmentation: need at least one slack");
  if (spec.b1.cols() != n1 || spec.b2.rows() != q || spec.b2.cols() != n2)
    throw DimensionMismatch("construct_mutual_augmentation: B1 must be q x n1 and B2 q x n2");

  // (scaled rows, sign rows left for the tail)
  auto split = [](const HPoly& p, const RatMatrix& c, const char* name) {
    if (c.rows() != c.cols()) throw DimensionMismatch(std::string(name) + " must be square");
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (i != j && !c(i, j).is_zero()) throw PreconditionViolation(std::string(name) + " must be diagonal");
        if (i == j && c(i, j).sign() <= 0) throw PreconditionViolation(std::string(name) + " needs a positive diagonal");
      }
    const auto rows = p.rows();
    std::vector<Constraint> head, tail;
    if (c.rows() == rows.size()) {
      for (std::size_t i = 0; i < rows.size(); ++i) head.push_back(scaled(rows[i], c(i, i)));
      return std::pair{head, tail};
    }
    for (const auto& r : rows) (is_sign_row(r) ? tail : head).push_back(r);
    if (c.rows() != head.size())
      throw DimensionMismatch(std::string(name) + " must match all rows or the non-sign rows");
    for (std::size_t i = 0; i < head.size(); ++i) head[i] = scaled(head[i], c(i, i));
    return std::pair{head, tail};
  };
  const auto [head1, tail1] = split(p1, spec.c1, "C1");
  const auto [head2, tail2] = split(p2, spec.c2, "C2");

  std::string label = "u";
  for (int k = 1; p1.space().has_class(label) || p2.space().has_class(label); ++k) label = "u" + std::to_string(k);
  const VarSpace space = p1.space().concat(p2.space()).concat(VarSpace::of_class(label, q));
  const std::size_t n = n1 + n2 + q;

  auto place = [n](const Constraint& c, std::size_t at) {
    RatVector a(n);
    std::copy(c.coeffs.begin(), c.coeffs.end(), a.begin() + static_cast<std::ptrdiff_t>(at));
    return Constraint{std::move(a), c.sense, c.rhs};
  };
  std::vector<Constraint> rows;
  for (const auto& r : head1) rows.push_back(place(r, 0));
  for (std::size_t i = 0; i < q; ++i) {
    RatVector a(n);
    for (std::size_t j = 0; j < n1; ++j) a[j] = spec.b1(i, j);
    for (std::size_t j = 0; j < n2; ++j) a[n1 + j] = spec.b2(i, j);
    a[n1 + n2 + i] = -1;
    rows.push_back({std::move(a), Sense::LessEq, 0});
  }
  for (const auto& r : head2) rows.push_back(place(r, n1));
  for (const auto& r : tail1) rows.push_back(place(r, 0));
  for (const auto& r : tail2) rows.push_back(place(r, n1));
  for (std::size_t i = 0; i < q; ++i) {
    RatVector a(n);
    a[n1 + n2 + i] = -1;
    rows.push_back({std::move(a), Sense::LessEq, 0});
  }
  HPoly w(space, rows);

  std::vector<std::size_t> first(n1), second(n2);
  for (std::size_t j = 0; j < n1; ++j) first[j] = j;
  for (std::size_t j = 0; j < n2; ++j) second[j] = n1 + j;
  if (!projection_equals(project_positions(w, first), p1))
    throw InternalError("construct_mutual_augmentation: projection onto p1's variables differs from p1");
  if (!projection_equals(project_positions(w, second), p2))
    throw InternalError("construct_mutual_augmentation: projection onto p2's variables differs from p2");
  return w;
}

bool EFVerdict::holds(int definition) const {
  switch (definition) {
    case 1: return def1.value_or(false);
    case 2: return def2.has_value();
    case 3: return def3.value_or(false);
    default: return false;
  }
}

EFVerdict check_ef(const HPoly& target, const HPoly& candidate, int definition,
                   const std::optional<AffineMapSpec>& witness) {
  EFVerdict v;
  run_def(v, target, candidate, definition, witness);
  return v;
}

EFVerdict check_ef(const VPoly& target, const HPoly& candidate, int definition,
                   const std::optional<AffineMapSpec>& witness) {
  return check_ef(as_hpoly(target), candidate, definition, witness);
}

std::string to_string(RelationTag t) {
  switch (t) {
    case RelationTag::WellDefinedEF: return "WellDefinedEF";
    case RelationTag::NoRelation: return "NoRelation";
    case RelationTag::IllDefined: return "IllDefined";
  }
  return "?";
}

RelationClass classify_relationship(const HPoly& p, const HPoly& q, const std::vector<AffineMapSpec>& witnesses) {
  RelationClass out;
  run_def1(out.q_of_p, p, q);
  run_def1(out.p_of_q, q, p);

  if (!independent_spaces(p.space(), q.space())) {
    out.tag = out.q_of_p.holds(1) || out.p_of_q.holds(1) ? RelationTag::WellDefinedEF : RelationTag::NoRelation;
    return out;
  }

  run_def3(out.q_of_p, p, q);
  run_def3(out.p_of_q, q, p);
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const AffineMapSpec& w = witnesses[i];
    const bool forward = same_variables(w.domain(), q.space()) && same_variables(w.codomain(), p.space());
    const bool backward = same_variables(w.domain(), p.space()) && same_variables(w.codomain(), q.space());
    if (!forward && !backward) {
      out.q_of_p.notes.push_back("witness " + std::to_string(i) + " fits neither direction");
      continue;
    }
    EFVerdict& v = forward ? out.q_of_p : out.p_of_q;
    if (v.def2) continue;
    try {
      run_def2(v, forward ? p : q, forward ? q : p, w);
    } catch (const PreconditionViolation& e) {
      v.notes.push_back("witness " + std::to_string(i) + ": " + e.what());
    }
  }

  const bool mapped = out.q_of_p.def2.has_value() || out.p_of_q.def2.has_value();
  if (mapped) {
    out.tag = RelationTag::IllDefined;
    if (out.q_of_p.holds(1) || out.p_of_q.holds(1))
      out.caveat = "definition 1 holds as well; one side is not a polytope";
  } else {
    out.tag = RelationTag::NoRelation;
    out.caveat = "no supplied map verifies; existence of a linear map was not searched";
  }
  return out;
}

bool overlap_augmentation_invariance(const HPoly& p1, const HPoly& p2, const HPoly& p3) {
  if (!p1.space().is_subset_of(p2.space()))
    throw PreconditionViolation("overlap_augmentation_invariance: p1's variables must be among p2's");
  const AugmentationCheck aug = check_augmentation(p2, p3);
  if (!aug.holds) throw PreconditionViolation("overlap_augmentation_invariance: p3 does not augment p2 (" + aug.detail + ")");
  if (p1.a().is_zero()) throw PreconditionViolation("overlap_augmentation_invariance: A1 is zero");
  if (p2.block(positions_in(p2.space(), p1.space())).is_zero())
    throw PreconditionViolation("overlap_augmentation_invariance: A2 is zero");
  return check_ef(p1, p3, 1).def1 == check_ef(p1, p2, 1).def1;
}

}  // namespace efpoly
