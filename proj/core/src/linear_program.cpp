#include "spherotrop/linear_program.hpp"

#include "spherotrop/error.hpp"

namespace spherotrop::lp {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last column is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

Status run(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
  while (true) {
    std::size_t enter = t.ncols;
    for (std::size_t j = 0; j < t.ncols && enter == t.ncols; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (!t.rows[i][j].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      if (reduced.sign() > 0) enter = j;
    }
    if (enter == t.ncols) return Status::Optimal;
    std::size_t leave = t.rows.size();
    Rational best;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][enter].sign() <= 0) continue;
      Rational ratio = t.rows[i][t.ncols] / t.rows[i][enter];
      if (leave == t.rows.size() || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == t.rows.size()) return Status::Unbounded;
    t.pivot(leave, enter);
  }
}

}  // namespace

Solution maximize(std::size_t nvars, const std::vector<Rational>& objective,
                  const std::vector<Constraint>& constraints) {
  if (objective.size() != nvars) throw RankMismatch("objective length does not match variable count");
  // Columns: x+ (nvars), x- (nvars), one slack per inequality, one artificial per row.
  std::size_t nslack = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != nvars) throw RankMismatch("constraint length does not match variable count");
    if (c.sense != Sense::Equal) ++nslack;
  }
  const std::size_t m = constraints.size();
  const std::size_t slack0 = 2 * nvars;
  const std::size_t art0 = slack0 + nslack;
  Tableau t;
  t.ncols = art0 + m;
  t.rows.assign(m, std::vector<Rational>(t.ncols + 1));
  t.basis.assign(m, 0);
  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    int flip = c.rhs.sign() < 0 ? -1 : 1;
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < nvars; ++j) {
      row[j] = c.coeffs[j] * Rational(flip);
      row[nvars + j] = -row[j];
    }
    if (c.sense != Sense::Equal) {
      row[slack0 + s] = Rational(c.sense == Sense::LessEq ? flip : -flip);
      ++s;
    }
    row[art0 + i] = Rational(1);
    row[t.ncols] = c.rhs * Rational(flip);
    t.basis[i] = art0 + i;
  }

  std::vector<Rational> phase1(t.ncols + 1);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = Rational(-1);
  std::vector<bool> all(t.ncols, true);
  run(t, phase1, all);
  Rational infeasibility;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= art0) infeasibility += t.rows[i][t.ncols];
  Solution sol;
  if (!infeasibility.is_zero()) return sol;

  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t col = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    if (col == art0) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }

  std::vector<Rational> cost(t.ncols + 1);
  for (std::size_t j = 0; j < nvars; ++j) {
    cost[j] = objective[j];
    cost[nvars + j] = -objective[j];
  }
  std::vector<bool> allowed(t.ncols, true);
  for (std::size_t j = art0; j < t.ncols; ++j) allowed[j] = false;
  Status st = run(t, cost, allowed);
  sol.status = st;
  if (st == Status::Unbounded) return sol;
  std::vector<Rational> values(t.ncols);
  for (std::size_t i = 0; i < t.rows.size(); ++i) values[t.basis[i]] = t.rows[i][t.ncols];
  sol.x.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    sol.x[j] = values[j] - values[nvars + j];
    sol.value += objective[j] * sol.x[j];
  }
  return sol;
}

Solution minimize(std::size_t nvars, const std::vector<Rational>& objective,
                  const std::vector<Constraint>& constraints) {
  std::vector<Rational> neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  Solution s = maximize(nvars, neg, constraints);
  s.value = -s.value;
  return s;
}

}  // namespace spherotrop::lp
