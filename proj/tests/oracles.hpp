#pragma once

// Reference computations used only by the tests. Each one follows a different route
// from the library code it checks.

#include <lplab/basis.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace lplab::oracle {

/// Both roots of x^2 + b x + c by the quadratic formula.
inline std::pair<std::complex<double>, std::complex<double>> quadratic_roots(double b, double c) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * c, 0.0));
  return {(-b + disc) / 2.0, (-b - disc) / 2.0};
}

/// Expands prod (x - r) in complex arithmetic; returns a_k = -c_k (imaginary parts dropped).
inline Eigen::VectorXd coefficients_from_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> poly{1.0};
  for (auto r : roots) {
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= r * poly[i];
    }
    poly = std::move(next);
  }
  Eigen::VectorXd a(static_cast<Index>(poly.size() - 1));
  for (Index k = 0; k < a.size(); ++k) a[k] = -poly[static_cast<std::size_t>(k) + 1].real();
  return a;
}

/// DCT-1 weights by solving the N x N cosine system directly.
inline Eigen::VectorXd dct1_by_dense_solve(const Eigen::VectorXd& f) {
  const Index N = f.size();
  Eigen::MatrixXd C(N, N);
  for (Index n = 0; n < N; ++n) {
    for (Index k = 0; k < N; ++k) {
      C(n, k) = std::cos(std::numbers::pi * static_cast<double>(n * k) / static_cast<double>(N - 1));
    }
  }
  return C.fullPivLu().solve(f);
}

/// Minimum-norm least-squares weights through the eigen-decomposition pseudo-inverse of
/// the normal matrix X'X.
inline Eigen::VectorXd covariance_pinv(const Eigen::VectorXd& f, Index p, Index* rank = nullptr) {
  const Index rows = f.size() - p;
  Eigen::MatrixXd X(rows, p);
  for (Index r = 0; r < rows; ++r) {
    for (Index k = 1; k <= p; ++k) X(r, k - 1) = f[p + r - k];
  }
  const Eigen::VectorXd y = f.tail(rows);
  const Eigen::MatrixXd R = X.transpose() * X;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(R);
  const double cutoff = 1e-10 * eig.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(p);
  Index r = 0;
  for (Index i = 0; i < p; ++i) {
    if (eig.eigenvalues()[i] > cutoff) {
      inv[i] = 1.0 / eig.eigenvalues()[i];
      ++r;
    }
  }
  if (rank) *rank = r;
  return eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose() * (X.transpose() * y);
}

/// Pascal's triangle row n.
inline std::vector<std::int64_t> pascal_row(int n) {
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

/// Delta^k f(m) by k repeated first differences.
inline Eigen::VectorXd repeated_difference(Eigen::VectorXd f, Index k) {
  for (Index j = 0; j < k; ++j) f = (f.tail(f.size() - 1) - f.head(f.size() - 1)).eval();
  return f;
}

/// Prediction f(n-1) + Delta f(n-1) + ... + Delta^{p-1} f(n-1), built term by term.
inline double telescoped_prediction(const Eigen::VectorXd& f, Index n, Index p) {
  double total = 0.0;
  for (Index k = 0; k < p; ++k) {
    // Delta^k at position n-1 uses f(n-1-k..n-1).
    const Eigen::VectorXd window = f.segment(n - 1 - k, k + 1);
    total += repeated_difference(window, k)[0];
  }
  return total;
}

/// Smallest sum of b^2 over the complement of any p-subset of `support`, by enumeration.
inline double min_rejected_energy(const Eigen::VectorXd& b, const std::vector<Index>& support, Index p) {
  const std::size_t m = support.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<Index>(__builtin_popcount(mask)) != p) continue;
    double rejected = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) rejected += b[support[i]] * b[support[i]];
    }
    best = std::min(best, rejected);
  }
  return best;
}

// Yule-Walker normal equations built with plain loops and a dense LU solve
inline Eigen::VectorXd autocorrelation_solve(const Eigen::VectorXd& f, Index p) {
  const Index N = f.size();
  std::vector<double> r(p + 1, 0.0);
  for (Index k = 0; k <= p; ++k) {
    for (Index n = k; n < N; ++n) r[k] += f[n] * f[n - k];
    r[k] /= static_cast<double>(N);
  }
  Eigen::MatrixXd R(p, p);
  Eigen::VectorXd rhs(p);
  for (Index i = 0; i < p; ++i) {
    rhs[i] = r[i + 1];
    for (Index j = 0; j < p; ++j) R(i, j) = r[i > j ? i - j : j - i];
  }
  return R.fullPivLu().solve(rhs);
}

}  // namespace lplab::oracle
