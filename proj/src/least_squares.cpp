#include <lplab/least_squares.hpp>
#include <lplab/recurrence.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace lplab {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

// Relative pivot threshold for the rank decision.
constexpr double rank_threshold = 1e-13;

// Rows n = p..N-1 of [f(n-1) ... f(n-p)].
Eigen::MatrixXd lagged_design(const Eigen::VectorXd& f, Index p) {
  const Index rows = f.size() - p;
  Eigen::MatrixXd x(rows, p);
  for (Index k = 1; k <= p; ++k) x.col(k - 1) = f.segment(p - k, rows);
  return x;
}

void require_finite_system(const Eigen::MatrixXd& normal, const Eigen::VectorXd& rhs) {
  if (!normal.allFinite() || !rhs.allFinite()) {
    throw NumericFailure("fit: normal equations contain non-finite entries");
  }
}

LpFit fit_covariance(const Signal& signal, Index p) {
  const Eigen::VectorXd& f = signal.samples();
  const Eigen::MatrixXd x = lagged_design(f, p);
  const Eigen::VectorXd y = f.tail(f.size() - p);
  require_finite_system(x.transpose() * x, x.transpose() * y);

  // Same minimizer as the normal equations X'X a = X'y, solved on X itself so the
  // conditioning is not squared.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(rank_threshold);
  cod.compute(x);
  Eigen::VectorXd a = cod.solve(y);
  if (!a.allFinite()) throw NumericFailure("fit: least-squares solve produced non-finite weights");

  const Eigen::VectorXd sv = x.jacobiSvd().singularValues();
  const double smallest = sv[sv.size() - 1];
  const double condition = smallest > 0.0 ? (sv[0] / smallest) * (sv[0] / smallest) : infinity;

  LpCoefficients coeffs(std::move(a));
  const double residual_mse = mean_square(residuals(coeffs, signal));
  return {std::move(coeffs), {residual_mse, cod.rank(), condition, FitMethod::covariance}};
}

LpFit fit_autocorrelation(const Signal& signal, Index p) {
  const Eigen::VectorXd& f = signal.samples();
  const Index N = f.size();
  Eigen::VectorXd r(p + 1);
  for (Index k = 0; k <= p; ++k) {
    r[k] = f.tail(N - k).dot(f.head(N - k)) / static_cast<double>(N);
  }
  Eigen::MatrixXd toeplitz(p, p);
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < p; ++j) toeplitz(i, j) = r[std::abs(i - j)];
  }
  const Eigen::VectorXd rhs = r.tail(p);
  require_finite_system(toeplitz, rhs);

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(rank_threshold);
  cod.compute(toeplitz);
  Eigen::VectorXd a = cod.solve(rhs);
  if (!a.allFinite()) throw NumericFailure("fit: autocorrelation solve produced non-finite weights");

  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(toeplitz, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .cwiseAbs();
  const double condition = ev.minCoeff() > 0.0 ? ev.maxCoeff() / ev.minCoeff() : infinity;

  LpCoefficients coeffs(std::move(a));
  const double residual_mse = mean_square(residuals(coeffs, signal));
  return {std::move(coeffs), {residual_mse, cod.rank(), condition, FitMethod::autocorrelation}};
}

}  // namespace

std::string_view to_string(FitMethod method) {
  return method == FitMethod::covariance ? "covariance" : "autocorrelation";
}

FitMethod parse_fit_method(std::string_view name) {
  if (name == "covariance") return FitMethod::covariance;
  if (name == "autocorrelation") return FitMethod::autocorrelation;
  throw InvalidArgument("unknown fit method '" + std::string(name) +
                        "' (expected covariance or autocorrelation)");
}

LpFit fit(const Signal& signal, Index order, FitMethod method) {
  if (order < 1) throw InvalidArgument("fit: order must be at least 1");
  if (signal.size() < 2 * order) {
    throw InsufficientData("fit: " + std::to_string(signal.size()) + " samples cannot support order " +
                           std::to_string(order) + " (need at least " +
                           std::to_string(2 * order) + ")");
  }
  return method == FitMethod::covariance ? fit_covariance(signal, order)
                                         : fit_autocorrelation(signal, order);
}

double prediction_objective(const Signal& signal, const Eigen::Ref<const Eigen::VectorXd>& a,
                            Index first) {
  const Index p = a.size();
  const Eigen::VectorXd& f = signal.samples();
  if (first < p || first >= f.size()) throw InvalidArgument("prediction_objective: bad start index");
  double total = 0.0;
  for (Index n = first; n < f.size(); ++n) {
    const double r = f[n] - a.dot(f.segment(n - p, p).reverse());
    total += r * r;
  }
  return total;
}

BasisIdentification identify_bases(const Signal& signal, Index order, FitMethod method,
                                   double cluster_tol) {
  LpFit fitted = fit(signal, order, method);
  RootSet roots = find_roots(characteristic_polynomial(fitted.coefficients), cluster_tol);
  std::vector<BasisTerm> bases = roots_to_bases(roots);
  SolvedWeights weights = solve_weights(bases, signal.samples().head(order));

  ApproxReport report{
      .mse = fitted.diagnostics.residual_mse,
      .bound = std::nullopt,
      .residuals = residuals(fitted.coefficients, signal),
      .method = ApproxMethod::least_squares,
      .order = order,
  };
  return {std::move(fitted),   std::move(roots),          std::move(bases),
          std::move(weights.expansion), weights.condition_estimate, std::move(report)};
}

}  // namespace lplab
