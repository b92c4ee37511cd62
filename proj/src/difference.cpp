#include <lplab/difference.hpp>
#include <lplab/recurrence.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

namespace lplab {

namespace {

void require_order(Index p, const char* where) {
  if (p < 0 || p > max_difference_order) {
    throw InvalidArgument(std::string(where) + ": order " + std::to_string(p) + " outside [0, " +
                          std::to_string(max_difference_order) + "]");
  }
}

}  // namespace

std::int64_t binomial(Index n, Index k) {
  if (n < 0 || k < 0 || k > n || n > 62) throw InvalidArgument("binomial: arguments out of range");
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  // c * (n - i) is divisible by (i + 1) at every step; the product can pass 2^63 near n = 62
  for (Index i = 0; i < k; ++i) c = c * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
  return static_cast<std::int64_t>(c);
}

Signal forward_difference(const Signal& signal, Index k) {
  require_order(k, "forward_difference");
  const Index N = signal.size();
  if (N <= k) {
    throw InvalidArgument("forward_difference: signal length " + std::to_string(N) +
                          " must exceed order " + std::to_string(k));
  }
  const Eigen::VectorXd& f = signal.samples();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(N - k);
  for (Index i = 0; i <= k; ++i) {
    const double w = static_cast<double>(binomial(k, i)) * (i % 2 == 0 ? 1.0 : -1.0);
    out += w * f.segment(k - i, N - k);
  }
  return Signal(std::move(out));
}

LpCoefficients diff_lp_coefficients(Index p) {
  if (p < 1) throw InvalidArgument("diff_lp_coefficients: order must be at least 1");
  require_order(p, "diff_lp_coefficients");
  Eigen::VectorXd a(p);
  for (Index k = 1; k <= p; ++k) {
    a[k - 1] = static_cast<double>(binomial(p, k)) * (k % 2 == 1 ? 1.0 : -1.0);
  }
  return LpCoefficients(std::move(a));
}

double difference_lambda(Index p) {
  if (p < 1) throw InvalidArgument("difference_lambda: order must be at least 1");
  require_order(p, "difference_lambda");
  return std::ldexp(1.0, static_cast<int>(p - 1));
}

double local_range(const Signal& signal, Index p) {
  const Eigen::VectorXd& f = signal.samples();
  if (f.size() <= p) throw InvalidArgument("local_range: signal too short for window");
  double widest = 0.0;
  for (Index n = p; n < f.size(); ++n) {
    const auto window = f.segment(n - p, p + 1);
    widest = std::max(widest, window.maxCoeff() - window.minCoeff());
  }
  return widest;
}

DiffConstruction construct_diff_lp(const Signal& signal, Index p) {
  const Index N = signal.size();
  if (p < 1) throw InvalidArgument("construct_diff_lp: order must be at least 1");
  if (N <= p) {
    throw InvalidArgument("construct_diff_lp: signal length " + std::to_string(N) +
                          " must exceed order " + std::to_string(p));
  }
  LpCoefficients coeffs = diff_lp_coefficients(p);
  const Eigen::VectorXd& f = signal.samples();
  const Eigen::VectorXd& a = coeffs.weights();

  Eigen::VectorXd predicted(N - p);
  for (Index n = p; n < N; ++n) predicted[n - p] = a.dot(f.segment(n - p, p).reverse());
  Signal residual(f.tail(N - p) - predicted);
  const Signal delta = forward_difference(signal, p);

  DiffBoundReport bound;
  bound.order = p;
  bound.lambda = difference_lambda(p);
  bound.omega = local_range(signal, p);
  bound.bound = bound.lambda * bound.lambda * bound.omega * bound.omega;
  bound.mse = mean_square(residual);
  bound.max_abs_diff = delta.samples().cwiseAbs().maxCoeff();

  ApproxReport report{
      .mse = bound.mse,
      .bound = bound.bound,
      .residuals = std::move(residual),
      .method = ApproxMethod::diff_op,
      .order = p,
  };
  return {LpModel(std::move(coeffs), f.head(p)), std::move(report), bound, Signal(std::move(predicted))};
}

Signal sample_uniform(const Sampler& fn, double lo, double hi, Index count) {
  if (!(lo < hi)) throw InvalidArgument("sample_uniform: interval must satisfy lo < hi");
  if (count < 2) throw InvalidArgument("sample_uniform: at least two samples required");
  const double h = (hi - lo) / static_cast<double>(count - 1);
  Eigen::VectorXd f(count);
  for (Index i = 0; i < count; ++i) {
    const double x = i == count - 1 ? hi : lo + static_cast<double>(i) * h;
    f[i] = fn(x);
  }
  return Signal(std::move(f), Grid{lo, h});
}

std::vector<RefinementRow> refinement_experiment(const Sampler& fn, double lo, double hi, Index p,
                                                 std::span<const Index> sample_counts) {
  if (!(lo < hi)) throw InvalidArgument("refinement_experiment: interval must satisfy lo < hi");
  for (Index n : sample_counts) {
    if (n <= p) {
      throw InvalidArgument("refinement_experiment: N = " + std::to_string(n) +
                            " must exceed order " + std::to_string(p));
    }
  }
  std::vector<std::future<RefinementRow>> jobs;
  jobs.reserve(sample_counts.size());
  for (Index n : sample_counts) {
    jobs.push_back(std::async(std::launch::async, [&fn, lo, hi, p, n] {
      const DiffConstruction built = construct_diff_lp(sample_uniform(fn, lo, hi, n), p);
      return RefinementRow{n, built.bound.mse, built.bound.max_abs_diff, built.bound.bound};
    }));
  }
  std::vector<RefinementRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

std::vector<OrderSweepRow> order_sweep(const Signal& signal, std::span<const Index> orders) {
  std::vector<OrderSweepRow> rows;
  for (Index p : orders) {
    if (p >= signal.size()) {
      throw InvalidArgument("order_sweep: order " + std::to_string(p) + " must be below N = " +
                            std::to_string(signal.size()));
    }
    rows.push_back({p, construct_diff_lp(signal, p).report.mse});
  }
  return rows;
}

}  // namespace lplab
