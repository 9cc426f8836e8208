#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spherotrop {

/// Dense square complex matrix, row-major, n <= 8.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t size) : n(size), a(size * size) {}
  ComplexMatrix(std::size_t size, std::vector<std::complex<double>> entries);

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);

struct SvdOptions {
  double tolerance = 1e-12;  // relative off-diagonal threshold
  int max_sweeps = 60;
};

/// Singular values (increasing) by one-sided Jacobi rotations. Throws
/// NoConvergence with the remaining off-diagonal residual after the sweep cap.
std::vector<double> svd_values(const ComplexMatrix& m, const SvdOptions& options = {});

}  // namespace spherotrop
