#include "spherotrop/series_matrix.hpp"

#include <map>

#include "spherotrop/error.hpp"

namespace spherotrop {

SeriesMatrix::SeriesMatrix(std::vector<std::vector<PuiseuxSeries>> rows) : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (auto& r : rows) {
    if (r.size() != n_) throw RankMismatch("series matrix must be square");
    for (auto& e : r) a_.push_back(std::move(e));
  }
}

SeriesMatrix SeriesMatrix::identity(std::size_t n) {
  SeriesMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PuiseuxSeries(1);
  return m;
}

SeriesMatrix SeriesMatrix::diagonal(const std::vector<PuiseuxSeries>& d) {
  SeriesMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

PuiseuxSeries SeriesMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  if (rows.size() != cols.size()) throw RankMismatch("minor needs as many rows as columns");
  const std::size_t k = rows.size();
  if (k == 0) return PuiseuxSeries(1);
  if (k > 20) throw DimensionTooLarge("minor too large");
  // Expansion along rows; table keyed by the bitmask of used columns.
  std::map<unsigned, PuiseuxSeries> table{{0u, PuiseuxSeries(1)}};
  for (std::size_t r = 0; r < k; ++r) {
    std::map<unsigned, PuiseuxSeries> next;
    for (const auto& [mask, val] : table) {
      if (val.is_exact_zero()) continue;
      int passed = 0;
      for (std::size_t c = 0; c < k; ++c) {
        unsigned bit = 1u << c;
        if (mask & bit) {
          ++passed;
          continue;
        }
        const PuiseuxSeries& entry = at(rows[r], cols[c]);
        if (entry.is_exact_zero()) continue;
        // Sign of placing column c after the columns already used to its right.
        int right = static_cast<int>(__builtin_popcount(mask)) - passed;
        PuiseuxSeries term = val * entry;
        if (right % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, term);
        if (!inserted) it->second += term;
      }
    }
    table = std::move(next);
  }
  unsigned full = k >= 32 ? ~0u : ((1u << k) - 1);
  auto it = table.find(full);
  return it == table.end() ? PuiseuxSeries() : it->second;
}

PuiseuxSeries SeriesMatrix::determinant() const {
  std::vector<std::size_t> idx(n_);
  for (std::size_t i = 0; i < n_; ++i) idx[i] = i;
  return minor(idx, idx);
}

std::vector<std::complex<double>> SeriesMatrix::evaluate(double t) const {
  std::vector<std::complex<double>> out;
  out.reserve(a_.size());
  for (const auto& e : a_) out.push_back(e.evaluate(t));
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.n_ != b.n_) throw RankMismatch("matrix sizes differ");
  SeriesMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      PuiseuxSeries s;
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a.at(i, k).is_exact_zero() || b.at(k, j).is_exact_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      c.at(i, j) = s;
    }
  return c;
}

}  // namespace spherotrop
