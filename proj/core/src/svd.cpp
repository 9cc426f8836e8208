#include "spherotrop/svd.hpp"

#include <algorithm>
#include <cmath>

#include "spherotrop/error.hpp"

namespace spherotrop {

ComplexMatrix::ComplexMatrix(std::size_t size, std::vector<std::complex<double>> entries)
    : n(size), a(std::move(entries)) {
  if (a.size() != n * n) throw RankMismatch("complex matrix entries do not form a square");
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.n != y.n) throw RankMismatch("matrix sizes differ");
  ComplexMatrix z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k)
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += x(i, k) * y(k, j);
  return z;
}

std::vector<double> svd_values(const ComplexMatrix& m, const SvdOptions& options) {
  const std::size_t n = m.n;
  if (n > 8) throw DimensionTooLarge("svd_values supports n <= 8");
  for (const auto& z : m.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidArgument("matrix has non-finite entries");
  // Columns of u are orthogonalized in place; their norms are the singular values.
  std::vector<std::vector<std::complex<double>>> col(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = m(i, j);

  double residual = 0.0;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    residual = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        std::complex<double> gamma = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          alpha += std::norm(col[p][i]);
          beta += std::norm(col[q][i]);
          gamma += std::conj(col[p][i]) * col[q][i];
        }
        double g = std::abs(gamma);
        if (g == 0.0 || alpha == 0.0 || beta == 0.0) continue;
        double off = g / std::sqrt(alpha * beta);
        residual = std::max(residual, off);
        if (off <= options.tolerance) continue;
        // Rotate so the pair becomes orthogonal: phase out gamma, then a real rotation.
        std::complex<double> phase = gamma / g;
        double zeta = (beta - alpha) / (2.0 * g);
        double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          std::complex<double> up = col[p][i];
          std::complex<double> uq = col[q][i] * std::conj(phase);
          col[p][i] = c * up - s * uq;
          col[q][i] = s * up + c * uq;
        }
      }
    }
    if (residual <= options.tolerance) {
      std::vector<double> values;
      for (const auto& c : col) {
        double s = 0.0;
        for (const auto& z : c) s += std::norm(z);
        values.push_back(std::sqrt(s));
      }
      std::sort(values.begin(), values.end());
      return values;
    }
  }
  throw NoConvergence("Jacobi SVD did not converge within " + std::to_string(options.max_sweeps) + " sweeps",
                      residual);
}

}  // namespace spherotrop
