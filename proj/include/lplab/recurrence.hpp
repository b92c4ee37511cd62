#pragma once

#include <lplab/signal.hpp>

#include <Eigen/Core>

namespace lplab {

/// Runs the recurrence forward from its seed values and returns f(0)..f(count-1).
/// Throws NumericOverflow naming the first sample that left the finite range.
Signal iterate(const LpModel& model, Index count);

/// One-step prediction errors r(n) = f(n) - sum_k a_k f(n-k), for n = p..N-1.
Signal residuals(const LpCoefficients& coeffs, const Signal& signal);

/// Mean of squared differences. Accepts any pair of equally sized Eigen vector expressions.
template <typename DerivedA, typename DerivedB>
double mean_square_error(const Eigen::MatrixBase<DerivedA>& actual,
                         const Eigen::MatrixBase<DerivedB>& predicted) {
  if (actual.size() != predicted.size()) {
    throw InvalidArgument("mse: length mismatch (" + std::to_string(actual.size()) + " vs " +
                          std::to_string(predicted.size()) + ")");
  }
  if (actual.size() == 0) throw InvalidArgument("mse: empty input");
  return (actual - predicted).squaredNorm() / static_cast<double>(actual.size());
}

inline double mse(const Signal& actual, const Signal& predicted) {
  return mean_square_error(actual.samples(), predicted.samples());
}

/// mean of r^2, the convention used by every ApproxReport.
inline double mean_square(const Signal& residual) {
  return residual.samples().squaredNorm() / static_cast<double>(residual.size());
}

}  // namespace lplab
