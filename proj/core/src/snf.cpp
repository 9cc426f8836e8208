#include "spherotrop/snf.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "spherotrop/error.hpp"

namespace spherotrop {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

void sort_decreasing(std::vector<Rational>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

std::vector<Rational> invariant_factors_minors(const SeriesMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  std::vector<Rational> d(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<Rational> best;
    std::optional<Rational> unknown_bound;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        PuiseuxSeries m = a.minor(rows, cols);
        if (m.is_exact_zero()) return;
        if (m.is_unknown()) {
          if (!unknown_bound || *m.truncation() < *unknown_bound) unknown_bound = *m.truncation();
          return;
        }
        Rational o = *m.ord();
        if (!best || o < *best) best = o;
      });
    });
    if (unknown_bound && (!best || *unknown_bound <= *best))
      throw PrecisionLoss("a " + std::to_string(k) + "x" + std::to_string(k) + " minor vanishes to known precision",
                          unknown_bound->to_string());
    if (!best) throw InvalidPoint("matrix is singular: every " + std::to_string(k) + "x" + std::to_string(k) + " minor is zero");
    d[k] = *best;
  }
  std::vector<Rational> e(n);
  for (std::size_t k = 1; k <= n; ++k) e[k - 1] = d[k] - d[k - 1];
  sort_decreasing(e);
  return e;
}

Rational ord_det(const SeriesMatrix& a) {
  PuiseuxSeries det = a.determinant();
  if (det.is_exact_zero()) throw InvalidPoint("matrix is singular");
  return *det.ord();
}

Elimination invariant_factors_elimination(const SeriesMatrix& a, const Rational& precision) {
  const std::size_t n = a.size();
  SeriesMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a.at(i, j).is_exact_zero()) m.at(i, j) = a.at(i, j).truncated(precision);
  SeriesMatrix left = SeriesMatrix::identity(n);
  SeriesMatrix right = SeriesMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(left.at(r, i), left.at(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(right.at(i, c), right.at(j, c));
  };

  std::vector<Rational> exps(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Rational best;
    std::optional<Rational> unknown_bound;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const PuiseuxSeries& e = m.at(i, j);
        if (e.is_exact_zero()) continue;
        if (e.is_unknown()) {
          if (!unknown_bound || *e.truncation() < *unknown_bound) unknown_bound = *e.truncation();
          continue;
        }
        Rational o = *e.ord();
        if (!pivot || o < best) {
          pivot = {i, j};
          best = o;
        }
      }
    if (unknown_bound && (!pivot || *unknown_bound <= best))
      throw PrecisionLoss("pivot search met an entry that vanishes to known precision", unknown_bound->to_string());
    if (!pivot) throw InvalidPoint("matrix is singular");
    swap_rows(k, pivot->first);
    swap_cols(k, pivot->second);
    const PuiseuxSeries p = m.at(k, k);
    const Rational q = *p.ord();
    exps[k] = q;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_exact_zero()) continue;
      PuiseuxSeries c = divide(m.at(i, k), p, precision - q);
      // row_i -= c row_k; left: column k += c column i.
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m.at(k, j).is_exact_zero()) m.at(i, j) = (m.at(i, j) - c * m.at(k, j)).truncated(precision);
      m.at(i, k) = PuiseuxSeries();
      for (std::size_t r = 0; r < n; ++r)
        if (!left.at(r, i).is_exact_zero()) left.at(r, k) += c * left.at(r, i);
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (m.at(k, j).is_exact_zero()) continue;
      PuiseuxSeries c = divide(m.at(k, j), p, precision - q);
      // col_j -= c col_k (only the pivot row is nonzero in column k now);
      // right: row k += c row j.
      m.at(k, j) = PuiseuxSeries();
      for (std::size_t col = 0; col < n; ++col)
        if (!right.at(j, col).is_exact_zero()) right.at(k, col) += c * right.at(j, col);
    }
  }

  Elimination out;
  out.tau = SeriesMatrix(n);
  out.left = left;
  for (std::size_t k = 0; k < n; ++k) {
    out.tau.at(k, k) = PuiseuxSeries::monomial(Rational(1), exps[k]);
    // A = L diag(u) tau R with u_k = pivot / t^{v_k}.
    PuiseuxSeries unit = m.at(k, k) * PuiseuxSeries::monomial(Rational(1), -exps[k]);
    for (std::size_t r = 0; r < n; ++r) out.left.at(r, k) = left.at(r, k) * unit;
  }
  out.right = right;
  out.factors = exps;
  sort_decreasing(out.factors);
  return out;
}

}  // namespace spherotrop
