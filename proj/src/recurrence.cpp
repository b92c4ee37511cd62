#include <lplab/recurrence.hpp>

#include <cmath>
#include <string>

namespace lplab {

Signal iterate(const LpModel& model, Index count) {
  const Index p = model.order();
  if (count < p) {
    throw InvalidArgument("iterate: count " + std::to_string(count) + " is below order " +
                          std::to_string(p));
  }
  const Eigen::VectorXd& a = model.coefficients().weights();
  Eigen::VectorXd f(count);
  f.head(p) = model.initial();
  for (Index n = p; n < count; ++n) {
    // a_1 pairs with f(n-1); reversing the window lines both up for a dot product.
    double value = a.dot(f.segment(n - p, p).reverse());
    if (!std::isfinite(value)) throw NumericOverflow(n);
    f[n] = value;
  }
  return Signal(std::move(f));
}

Signal residuals(const LpCoefficients& coeffs, const Signal& signal) {
  const Index p = coeffs.order();
  const Index N = signal.size();
  if (N <= p) {
    throw InvalidArgument("residuals: signal length " + std::to_string(N) +
                          " must exceed order " + std::to_string(p));
  }
  const Eigen::VectorXd& a = coeffs.weights();
  const Eigen::VectorXd& f = signal.samples();
  Eigen::VectorXd r(N - p);
  for (Index n = p; n < N; ++n) r[n - p] = f[n] - a.dot(f.segment(n - p, p).reverse());
  return Signal(std::move(r));
}

}  // namespace lplab
