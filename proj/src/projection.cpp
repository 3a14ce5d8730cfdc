#include "efpoly/projection.hpp"

#include <algorithm>
#include <map>

#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/redundancy.hpp"

namespace efpoly {

namespace {

struct Row {
  RatVector a;
  Rational b;
  bool eq = false;
  bool fresh = false;  // produced by the latest elimination step
};

void normalize(Row& r) {
  if (is_zero(r.a)) return;
  const Rational s = primitive_scale(r.a);
  for (auto& x : r.a) x *= s;
  r.b *= s;
  if (r.eq) {
    auto first = std::find_if(r.a.begin(), r.a.end(), [](const Rational& x) { return !x.is_zero(); });
    if (first->sign() < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
    }
  }
}

// Rows with no coefficients left are either always true or a contradiction.
bool drop_trivial(std::vector<Row>& rows) {
  bool contradiction = false;
  std::erase_if(rows, [&](const Row& r) {
    if (!is_zero(r.a)) return false;
    if (r.eq ? !r.b.is_zero() : r.b.sign() < 0) contradiction = true;
    return true;
  });
  return contradiction;
}

// Identical left-hand sides: keep the tightest inequality.
void dedupe(std::vector<Row>& rows) {
  std::map<std::pair<RatVector, bool>, std::size_t, decltype([](const auto& x, const auto& y) {
             if (x.second != y.second) return x.second < y.second;
             return lex_less(x.first, y.first);
           })>
      seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    auto [it, inserted] = seen.try_emplace({r.a, r.eq}, out.size());
    if (inserted) {
      out.push_back(std::move(r));
      continue;
    }
    Row& kept = out[it->second];
    if (!r.eq && r.b < kept.b) {
      kept.b = r.b;
      kept.fresh = r.fresh;
    }
  }
  rows = std::move(out);
}

HPoly system(const VarSpace& space, const std::vector<std::size_t>& cols, const std::vector<Row>& rows) {
  RatMatrix a(rows.size(), cols.size());
  RatVector b;
  std::vector<Sense> senses;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = rows[i].a[cols[j]];
    b.push_back(rows[i].b);
    senses.push_back(rows[i].eq ? Sense::Equal : Sense::LessEq);
  }
  return HPoly(space.subspace(cols), std::move(a), std::move(b), std::move(senses));
}

bool canonical_less(const Constraint& x, const Constraint& y) {
  if (x.sense != y.sense) return x.sense == Sense::Equal;
  if (x.coeffs != y.coeffs) return lex_less(y.coeffs, x.coeffs);
  return x.rhs < y.rhs;
}

}  // namespace

HPoly ProjectionResult::as_hpoly() const {
  switch (kind) {
    case Kind::Polyhedron:
      return poly;
    case Kind::FullSpace:
      return HPoly::full_space(space);
    case Kind::Empty:
      break;
  }
  return HPoly(space, {Constraint{RatVector(space.size()), Sense::LessEq, -1}});
}

std::string ProjectionResult::describe() const {
  switch (kind) {
    case Kind::Polyhedron:
      return "Polyhedron(" + std::to_string(poly.num_rows()) + " rows)";
    case Kind::FullSpace:
      return "FullSpace(" + std::to_string(dim()) + ")";
    case Kind::Empty:
      break;
  }
  return "Empty";
}

ProjectionResult project(const HPoly& u, const std::vector<std::string>& keep_classes) {
  if (keep_classes.empty()) throw PreconditionViolation("project: no classes to keep");
  for (const auto& c : keep_classes)
    if (!u.space().has_class(c)) throw PreconditionViolation("project: unknown class '" + c + "'");
  return project_positions(u, u.space().positions_of_classes(keep_classes));
}

ProjectionResult project_positions(const HPoly& u, const std::vector<std::size_t>& keep_in) {
  if (keep_in.empty()) throw PreconditionViolation("project: no variables to keep");
  const std::size_t n = u.dim();
  std::vector<bool> is_kept(n, false);
  for (auto j : keep_in) {
    if (j >= n) throw PreconditionViolation("project: variable position out of range");
    is_kept[j] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (is_kept[j]) keep.push_back(j);

  ProjectionResult res;
  res.space = u.space().subspace(keep);
  const auto empt = is_empty(u);
  if (empt.empty) {
    res.kind = ProjectionResult::Kind::Empty;
    res.witness = empt.certificate;
    return res;
  }

  std::vector<Row> rows;
  for (std::size_t r = 0; r < u.num_rows(); ++r) {
    Row row{u.a().row(r), u.b()[r], u.senses()[r] == Sense::Equal};
    normalize(row);
    rows.push_back(std::move(row));
  }
  if (drop_trivial(rows)) throw InternalError("project: contradiction in a feasible system");
  std::vector<bool> gone(n, false);

  // Equalities first: each one removes a variable without any blow-up.
  for (;;) {
    std::size_t best_row = 0, best_var = n, best_fill = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].eq) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_kept[j] || gone[j] || rows[i].a[j].is_zero()) continue;
        std::size_t fill = 0;
        for (const auto& r : rows) fill += r.a[j].is_zero() ? 0 : 1;
        if (best_var == n || fill < best_fill) {
          best_row = i;
          best_var = j;
          best_fill = fill;
        }
      }
    }
    if (best_var == n) break;
    const Row piv = rows[best_row];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best_row));
    for (auto& r : rows) {
      if (r.a[best_var].is_zero()) continue;
      const Rational f = r.a[best_var] / piv.a[best_var];
      for (std::size_t j = 0; j < n; ++j)
        if (!piv.a[j].is_zero()) r.a[j].sub_mul(f, piv.a[j]);
      r.b.sub_mul(f, piv.b);
      normalize(r);
    }
    gone[best_var] = true;
    if (drop_trivial(rows)) throw InternalError("project: contradiction in a feasible system");
  }
  dedupe(rows);

  std::vector<std::size_t> cols;
  auto active_cols = [&] {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (!gone[j]) cols.push_back(j);
  };

  for (;;) {
    // Fewest new rows first.
    std::size_t var = n;
    long best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_kept[j] || gone[j]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        const int s = r.a[j].sign();
        pos += s > 0;
        neg += s < 0;
      }
      if (pos + neg == 0) {
        gone[j] = true;
        continue;
      }
      const long score = pos * neg - pos - neg;
      if (var == n || score < best) {
        var = j;
        best = score;
      }
    }
    if (var == n) break;

    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      r.fresh = false;
      const int s = r.a[var].sign();
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // (-q_var) p + (p_var) q cancels var; both factors positive.
        Row c{RatVector(n), Rational(), false, true};
        const Rational fp = -q.a[var], fq = p.a[var];
        for (std::size_t j = 0; j < n; ++j) {
          if (!p.a[j].is_zero()) c.a[j].add_mul(fp, p.a[j]);
          if (!q.a[j].is_zero()) c.a[j].add_mul(fq, q.a[j]);
        }
        c.a[var] = 0;
        c.b.add_mul(fp, p.b);
        c.b.add_mul(fq, q.b);
        normalize(c);
        next.push_back(std::move(c));
      }
    gone[var] = true;
    if (drop_trivial(next)) throw InternalError("project: contradiction in a feasible system");
    dedupe(next);
    rows = std::move(next);

    // Rows that survive from an irredundant system stay irredundant, so
    // only the new combinations need the LP test.
    active_cols();
    for (std::size_t i = 0; i < rows.size();) {
      if (rows[i].fresh && detail::row_implied(system(u.space(), cols, rows), i)) {
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      ++i;
    }
  }

  if (rows.empty()) {
    res.kind = ProjectionResult::Kind::FullSpace;
    return res;
  }
  HPoly out = remove_row_redundancy(system(u.space(), keep, rows));
  if (out.num_rows() == 0) {
    res.kind = ProjectionResult::Kind::FullSpace;
    return res;
  }
  auto final_rows = out.rows();
  std::sort(final_rows.begin(), final_rows.end(), canonical_less);
  res.kind = ProjectionResult::Kind::Polyhedron;
  res.poly = HPoly(res.space, final_rows);
  return res;
}

ProjectionResult project_degenerate_case(const HPoly& u, std::size_t x_dim) {
  if (x_dim == 0 || x_dim > u.dim()) throw PreconditionViolation("project_degenerate_case: bad x dimension");
  std::vector<std::size_t> xs(x_dim);
  for (std::size_t j = 0; j < x_dim; ++j) xs[j] = j;
  if (!u.block(xs).is_zero())
    throw PreconditionViolation("project_degenerate_case: x block is not zero, use project instead");
  ProjectionResult res;
  res.space = u.space().subspace(xs);
  const auto empt = is_empty(u);
  if (empt.empty) {
    res.kind = ProjectionResult::Kind::Empty;
    res.witness = empt.certificate;
  } else {
    res.kind = ProjectionResult::Kind::FullSpace;
  }
  return res;
}

std::pair<RatVector, Rational> pushforward_objective(const RatVector& alpha, const AffineMapSpec& map) {
  const RatMatrix& c = map.matrix();
  if (alpha.size() != c.rows()) throw DimensionMismatch("pushforward_objective: alpha length differs from x dimension");
  for (const auto& v : c.entries())
    if (v.sign() < 0) throw PreconditionViolation("pushforward_objective: map matrix C must be entrywise nonnegative");
  return {c.transpose() * alpha, dot(alpha, map.offset())};
}

}  // namespace efpoly
