#pragma once

#include <lplab/basis.hpp>
#include <lplab/signal.hpp>

#include <string_view>
#include <vector>

namespace lplab {

enum class FitMethod {
  covariance,       ///< minimize sum_{n=p}^{N-1} r(n)^2 over the observed samples
  autocorrelation,  ///< biased autocorrelation Toeplitz system
};

std::string_view to_string(FitMethod method);
FitMethod parse_fit_method(std::string_view name);

struct FitDiagnostics {
  double residual_mse = 0.0;  ///< mean r(n)^2 over n = p..N-1 for the returned coefficients
  Index rank = 0;             ///< numerical rank of the system; < p means minimum-norm solution
  double condition_estimate = 0.0;
  FitMethod method = FitMethod::covariance;
};

struct LpFit {
  LpCoefficients coefficients;
  FitDiagnostics diagnostics;
};

/// Least-squares LP coefficients of the given order. Requires N >= 2 * order.
/// Rank-deficient systems return the minimum-norm minimizer and report rank < order.
LpFit fit(const Signal& signal, Index order, FitMethod method = FitMethod::covariance);

/// Sum of squared one-step residuals over n = first..N-1 for arbitrary weights `a`.
/// `first` must be at least a.size(); fixing it lets different orders be compared.
double prediction_objective(const Signal& signal, const Eigen::Ref<const Eigen::VectorXd>& a,
                            Index first);

struct BasisIdentification {
  LpFit fit;
  RootSet roots;
  std::vector<BasisTerm> bases;
  WeightedExpansion expansion;
  double weight_condition;
  ApproxReport report;
};

/// Fit, then read the interpolation bases off the characteristic roots and solve their
/// weights from the first p samples.
BasisIdentification identify_bases(const Signal& signal, Index order,
                                   FitMethod method = FitMethod::covariance,
                                   double cluster_tol = default_cluster_tol);

}  // namespace lplab
