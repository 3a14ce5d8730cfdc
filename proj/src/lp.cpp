#include "efpoly/lp.hpp"

#include <limits>

#include "efpoly/errors.hpp"

namespace efpoly {

LinProgram::LinProgram(RatVector objective, RatMatrix a, RatVector b, std::vector<Sense> senses)
    : objective_(std::move(objective)), a_(std::move(a)), b_(std::move(b)), senses_(std::move(senses)) {
  if (objective_.size() != a_.cols())
    throw DimensionMismatch("LinProgram: objective of length " + std::to_string(objective_.size()) +
                            " for " + std::to_string(a_.cols()) + " variables");
  if (a_.rows() != b_.size() || b_.size() != senses_.size())
    throw DimensionMismatch("LinProgram: row counts of A, b and senses differ");
}

LinProgram::LinProgram(RatVector objective, const HPoly& constraints)
    : LinProgram(std::move(objective), constraints.a(), constraints.b(), constraints.senses()) {}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau in standard form: T y = rhs, y >= 0, rhs >= 0.
// Columns are [structural | slack | artificial]; every row owns one
// artificial column so the initial basis is the identity.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * cols), rhs_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r * n_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * n_ + c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;  // reduced cost per column
  std::vector<bool> allowed;      // columns permitted to enter

  void price(const std::vector<Rational>& cost) {
    reduced = cost;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c)
        if (!at(r, c).is_zero()) reduced[c].sub_mul(cb, at(r, c));
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = at(pr, pc).reciprocal();
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < n_; ++c) {
      if (at(pr, c).is_zero()) continue;
      at(pr, c) *= inv;
      nz.push_back(c);
    }
    rhs_[pr] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || at(r, pc).is_zero()) continue;
      const Rational f = at(r, pc);
      for (auto c : nz) at(r, c).sub_mul(f, at(pr, c));
      if (!rhs_[pr].is_zero()) rhs_[r].sub_mul(f, rhs_[pr]);
    }
    if (!reduced.empty() && !reduced[pc].is_zero()) {
      const Rational f = reduced[pc];
      for (auto c : nz) reduced[c].sub_mul(f, at(pr, c));
    }
    basis[pr] = pc;
  }

  // Bland's rule. Returns false at optimality; sets unbounded_col when the
  // entering column has no positive entry.
  bool step(std::size_t& unbounded_col) {
    std::size_t pc = kNone;
    for (std::size_t c = 0; c < n_; ++c)
      if (allowed[c] && reduced[c].sign() < 0) {
        pc = c;
        break;
      }
    if (pc == kNone) return false;
    std::size_t pr = kNone;
    for (std::size_t r = 0; r < m_; ++r) {
      if (at(r, pc).sign() <= 0) continue;
      if (pr == kNone) {
        pr = r;
        continue;
      }
      // rhs_r / t_r  vs  rhs_pr / t_pr, all denominators positive
      const Rational lhs = rhs_[r] * at(pr, pc);
      const Rational rhs = rhs_[pr] * at(r, pc);
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[pr])) pr = r;
    }
    if (pr == kNone) {
      unbounded_col = pc;
      return false;
    }
    pivot(pr, pc);
    return true;
  }

  void remove_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * n_),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<Rational> t_;
  std::vector<Rational> rhs_;
};

struct ColumnMap {
  std::vector<std::size_t> pos;  // column of x_j (or x_j^+)
  std::vector<std::size_t> neg;  // column of x_j^-, kNone if x_j >= 0
};

bool row_is_sign_bound(const LinProgram& lp, std::size_t r, std::size_t& var) {
  if (!lp.b()[r].is_zero()) return false;
  std::size_t found = kNone;
  for (std::size_t c = 0; c < lp.num_vars(); ++c) {
    if (lp.a()(r, c).is_zero()) continue;
    if (found != kNone) return false;
    found = c;
  }
  if (found == kNone) return false;
  const int s = lp.a()(r, found).sign();
  if ((lp.senses()[r] == Sense::LessEq && s < 0) || (lp.senses()[r] == Sense::GreaterEq && s > 0)) {
    var = found;
    return true;
  }
  return false;
}

RatVector extract(const Tableau& tab, std::size_t rows, const ColumnMap& map, std::size_t nvars,
                  std::size_t ncols) {
  std::vector<Rational> y(ncols);
  for (std::size_t r = 0; r < rows; ++r) y[tab.basis[r]] = tab.rhs(r);
  RatVector x(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    x[j] = y[map.pos[j]];
    if (map.neg[j] != kNone) x[j] -= y[map.neg[j]];
  }
  return x;
}

}  // namespace

bool is_farkas_certificate(const RatMatrix& a, const RatVector& b, const std::vector<Sense>& senses,
                           const RatVector& y) {
  if (y.size() != a.rows()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (senses[i] == Sense::LessEq && y[i].sign() < 0) return false;
    if (senses[i] == Sense::GreaterEq && y[i].sign() > 0) return false;
  }
  if (!is_zero(a.transpose() * y)) return false;
  return dot(y, b).sign() < 0;
}

LpOutcome solve(const LinProgram& lp) {
  const std::size_t nvars = lp.num_vars();
  const std::size_t nrows = lp.num_rows();

  // Sign bounds x_j >= 0 become column restrictions rather than rows.
  std::vector<std::size_t> bound_row_of(nvars, kNone);
  std::vector<bool> is_bound_row(nrows, false);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::size_t v = kNone;
    if (row_is_sign_bound(lp, r, v) && bound_row_of[v] == kNone) {
      bound_row_of[v] = r;
      is_bound_row[r] = true;
    }
  }
  std::vector<std::size_t> general;
  for (std::size_t r = 0; r < nrows; ++r)
    if (!is_bound_row[r]) general.push_back(r);
  const std::size_t m = general.size();

  ColumnMap map;
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    map.pos.push_back(ncols++);
    map.neg.push_back(bound_row_of[j] == kNone ? ncols++ : kNone);
  }
  std::vector<std::size_t> slack_of(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.senses()[general[i]] != Sense::Equal) slack_of[i] = ncols++;
  const std::size_t first_art = ncols;
  ncols += m;

  Tableau tab(m, ncols);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = general[i];
    if (lp.b()[r].sign() < 0) flip[i] = -1;
    for (std::size_t j = 0; j < nvars; ++j) {
      const Rational& v = lp.a()(r, j);
      if (v.is_zero()) continue;
      tab.at(i, map.pos[j]) = flip[i] > 0 ? v : -v;
      if (map.neg[j] != kNone) tab.at(i, map.neg[j]) = flip[i] > 0 ? -v : v;
    }
    if (slack_of[i] != kNone) {
      const int s = lp.senses()[r] == Sense::LessEq ? 1 : -1;
      tab.at(i, slack_of[i]) = Rational(s * flip[i]);
    }
    tab.at(i, first_art + i) = 1;
    tab.rhs(i) = flip[i] > 0 ? lp.b()[r] : -lp.b()[r];
    const bool slack_basic = slack_of[i] != kNone && tab.at(i, slack_of[i]).sign() > 0;
    tab.basis.push_back(slack_basic ? slack_of[i] : first_art + i);
  }

  // Phase 1: minimise the sum of artificials.
  std::vector<Rational> cost1(ncols);
  for (std::size_t i = 0; i < m; ++i) cost1[first_art + i] = 1;
  tab.allowed.assign(ncols, true);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] != first_art + i) tab.allowed[first_art + i] = false;
  tab.price(cost1);
  std::size_t unb = kNone;
  while (tab.step(unb)) {
  }
  Rational phase1;
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis[i] >= first_art) phase1 += tab.rhs(i);

  LpOutcome out;
  if (phase1.sign() > 0) {
    // pi_i = c_art - reduced_art; y = -sigma * pi over general rows.
    RatVector y(nrows);
    for (std::size_t i = 0; i < m; ++i) {
      Rational pi = Rational(1) - tab.reduced[first_art + i];
      y[general[i]] = flip[i] > 0 ? -pi : pi;
    }
    // Residual on sign-bounded variables is absorbed by their bound rows.
    for (std::size_t j = 0; j < nvars; ++j) {
      if (bound_row_of[j] == kNone) continue;
      Rational g;
      for (std::size_t r = 0; r < nrows; ++r)
        if (!is_bound_row[r] && !y[r].is_zero()) g.add_mul(y[r], lp.a()(r, j));
      const std::size_t br = bound_row_of[j];
      y[br] = -g / lp.a()(br, j);
    }
    if (!is_farkas_certificate(lp.a(), lp.b(), lp.senses(), y))
      throw InternalError("simplex: phase-1 Farkas certificate failed verification");
    out.status = LpStatus::Infeasible;
    out.dual_certificate = std::move(y);
    return out;
  }

  // Drive zero-level artificials out of the basis; drop rows that are
  // linear combinations of the others.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t c = 0; c < first_art; ++c)
      if (!tab.at(i, c).is_zero()) {
        col = c;
        break;
      }
    if (col == kNone) {
      tab.remove_row(i);
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  // Phase 2.
  std::vector<Rational> cost2(ncols);
  for (std::size_t j = 0; j < nvars; ++j) {
    cost2[map.pos[j]] = lp.objective()[j];
    if (map.neg[j] != kNone) cost2[map.neg[j]] = -lp.objective()[j];
  }
  for (std::size_t c = first_art; c < ncols; ++c) tab.allowed[c] = false;
  tab.price(cost2);
  unb = kNone;
  while (tab.step(unb)) {
  }

  RatVector x = extract(tab, tab.rows(), map, nvars, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    if (!Constraint{lp.a().row(r), lp.senses()[r], lp.b()[r]}.satisfied_by(x))
      throw InternalError("simplex: returned point violates row " + std::to_string(r));

  if (unb != kNone) {
    std::vector<Rational> dir(ncols);
    dir[unb] = 1;
    for (std::size_t i = 0; i < tab.rows(); ++i) dir[tab.basis[i]] = -tab.at(i, unb);
    RatVector ray(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
      ray[j] = dir[map.pos[j]];
      if (map.neg[j] != kNone) ray[j] -= dir[map.neg[j]];
    }
    if (dot(lp.objective(), ray).sign() >= 0)
      throw InternalError("simplex: unbounded ray does not improve the objective");
    out.status = LpStatus::Unbounded;
    out.point = std::move(x);
    out.ray = std::move(ray);
    return out;
  }

  out.status = LpStatus::Optimal;
  out.optimum = dot(lp.objective(), x);
  out.point = std::move(x);
  return out;
}

LpOutcome maximize(const HPoly& p, const RatVector& c) {
  RatVector neg = c;
  for (auto& v : neg) v = -v;
  LpOutcome out = solve(LinProgram(std::move(neg), p));
  if (out.optimum) out.optimum = -*out.optimum;
  return out;
}

EmptinessCheck is_empty(const HPoly& p) {
  LpOutcome out = solve(LinProgram(RatVector(p.dim()), p));
  if (out.status == LpStatus::Infeasible) return {true, *out.dual_certificate};
  return {false, *out.point};
}

}  // namespace efpoly
