#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "spherotrop/puiseux.hpp"

namespace spherotrop {

/// Square matrix over truncated Puiseux series, row-major.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  explicit SeriesMatrix(std::size_t n) : n_(n), a_(n * n) {}
  explicit SeriesMatrix(std::vector<std::vector<PuiseuxSeries>> rows);

  static SeriesMatrix identity(std::size_t n);
  static SeriesMatrix diagonal(const std::vector<PuiseuxSeries>& d);

  std::size_t size() const noexcept { return n_; }
  PuiseuxSeries& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }
  const PuiseuxSeries& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

  /// Determinant of the submatrix on the given rows and columns.
  PuiseuxSeries minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PuiseuxSeries determinant() const;

  /// Entries evaluated at real t > 0 (stored terms only).
  std::vector<std::complex<double>> evaluate(double t) const;

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PuiseuxSeries> a_;
};

}  // namespace spherotrop
