#pragma once

#include <lplab/error.hpp>

#include <Eigen/Core>

#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace lplab {

using Eigen::Index;

/// Equidistant sampling grid x_n = x0 + n * step of a continuous function.
struct Grid {
  double x0 = 0.0;
  double step = 1.0;
};

/// Finite real sequence f(0)..f(N-1). Non-empty and finite by construction.
class Signal {
 public:
  explicit Signal(Eigen::VectorXd samples, std::optional<Grid> grid = std::nullopt);
  Signal(std::initializer_list<double> samples);
  static Signal from(const std::vector<double>& samples);

  const Eigen::VectorXd& samples() const noexcept { return samples_; }
  Index size() const noexcept { return samples_.size(); }
  double operator[](Index n) const { return samples_[n]; }
  const std::optional<Grid>& grid() const noexcept { return grid_; }

  /// max |f(n)|
  double max_abs() const { return samples_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::VectorXd samples_;
  std::optional<Grid> grid_;
};

/// Weights a_1..a_p of f(n) = sum_k a_k f(n-k).
class LpCoefficients {
 public:
  explicit LpCoefficients(Eigen::VectorXd a);
  LpCoefficients(std::initializer_list<double> a);

  const Eigen::VectorXd& weights() const noexcept { return a_; }
  Index order() const noexcept { return a_.size(); }
  /// a_k with the one-based index used by the recurrence.
  double operator()(Index k) const { return a_[k - 1]; }

 private:
  Eigen::VectorXd a_;
};

/// A recurrence together with the p seed values f(0)..f(p-1).
class LpModel {
 public:
  LpModel(LpCoefficients coefficients, Eigen::VectorXd initial);

  const LpCoefficients& coefficients() const noexcept { return coefficients_; }
  const Eigen::VectorXd& initial() const noexcept { return initial_; }
  Index order() const noexcept { return coefficients_.order(); }

 private:
  LpCoefficients coefficients_;
  Eigen::VectorXd initial_;
};

enum class ApproxMethod { least_squares, dct1, diff_op };

std::string_view to_string(ApproxMethod method);

/// Error summary of one approximation. mse is (1/len) * sum residuals^2.
struct ApproxReport {
  double mse = 0.0;
  std::optional<double> bound;
  Signal residuals;
  ApproxMethod method;
  Index order = 0;
};

namespace detail {
void require_finite(const Eigen::Ref<const Eigen::VectorXd>& values, std::string_view what);
}

}  // namespace lplab
