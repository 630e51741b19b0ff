#include "stickylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stickylab {

namespace {

std::vector<double> to_double(const StochasticMatrix& matrix) {
  std::vector<double> a(matrix.entries.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = matrix.entries[i].get_d();
  return a;
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
  return std::sqrt(sum);
}

void sort_descending(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

}  // namespace

std::vector<double> sticky_spectrum_closed_form(const StochasticMatrix& matrix) {
  if (!matrix.is_sticky()) throw std::invalid_argument("matrix is not sticky");
  const double a = matrix.at(0, 0).get_d();
  const double b = matrix.size > 1 ? matrix.at(0, 1).get_d() : 0.0;
  std::vector<double> values(matrix.size, a - b);
  values[0] = a + (matrix.size - 1) * b;
  sort_descending(values);
  return values;
}

std::vector<double> jacobi_eigenvalues(const StochasticMatrix& matrix) {
  if (!matrix.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  const int n = matrix.size;
  std::vector<double> a = to_double(matrix);
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a, n) > 1e-15; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double sign = theta >= 0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  sort_descending(values);
  return values;
}

SpectrumReport spectrum(const StochasticMatrix& matrix) {
  SpectrumReport report;
  const std::vector<double> jacobi = jacobi_eigenvalues(matrix);
  if (matrix.is_sticky()) {
    report.eigenvalues = sticky_spectrum_closed_form(matrix);
    for (size_t i = 0; i < jacobi.size(); ++i)
      report.solver_disagreement =
          std::max(report.solver_disagreement, std::abs(jacobi[i] - report.eigenvalues[i]));
    report.predicted = matrix.at(0, 0).get_d() - (matrix.size > 1 ? matrix.at(0, 1).get_d() : 0.0);
  } else {
    report.eigenvalues = jacobi;
    report.predicted = matrix.size > 1 ? std::abs(report.eigenvalues[1]) : 0.0;
  }
  report.second_largest_magnitude = 0.0;
  for (size_t i = 1; i < report.eigenvalues.size(); ++i)
    report.second_largest_magnitude =
        std::max(report.second_largest_magnitude, std::abs(report.eigenvalues[i]));
  report.residual = std::abs(report.second_largest_magnitude - report.predicted);
  return report;
}

SpectrumReport verify_expander(const WalkParams& params) {
  const StochasticMatrix matrix = transition_matrix(params);
  SpectrumReport report = spectrum(matrix);
  report.predicted = params.delta.get_d();
  report.residual = std::abs(report.second_largest_magnitude - report.predicted);

  // Witness vector v = e_0 - (1/p) 1; check (M v)_i == delta * v_i exactly in
  // rationals, then report through the 1e-10 float gate.
  const int p = params.p;
  std::vector<BigRational> v(p, BigRational(-1, p));
  v[0] += 1;
  bool witness = true;
  for (int i = 0; i < p && witness; ++i) {
    BigRational image(0);
    for (int j = 0; j < p; ++j) image += matrix.at(i, j) * v[j];
    const BigRational expected = params.delta * v[i];
    witness = std::abs(image.get_d() - expected.get_d()) < 1e-10;
  }
  report.witness_verified = witness;
  return report;
}

}  // namespace stickylab
