#pragma once

#include <lplab/signal.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lplab {

/// Largest difference order handled; C(p, k) stays exact in 64-bit integers well past this.
inline constexpr Index max_difference_order = 30;

/// Exact binomial coefficient C(n, k) for 0 <= k <= n <= 62.
std::int64_t binomial(Index n, Index k);

/// Delta^k f(m) = sum_{i=0}^{k} (-1)^i C(k, i) f(m - i) for m = k..N-1.
Signal forward_difference(const Signal& signal, Index k);

/// a_k = (-1)^{k-1} C(p, k): the recurrence f(n-1) + Delta f(n-1) + ... + Delta^{p-1} f(n-1)
/// collapsed onto past samples.
LpCoefficients diff_lp_coefficients(Index p);

/// Half the binomial row sum, 2^{p-1}.
double difference_lambda(Index p);

/// Largest range max - min over the windows f(n-p..n), n = p..N-1.
double local_range(const Signal& signal, Index p);

struct DiffBoundReport {
  Index order = 0;
  double lambda = 0.0;
  double omega = 0.0;
  double bound = 0.0;  ///< lambda^2 * omega^2
  double mse = 0.0;
  double max_abs_diff = 0.0;
};

struct DiffConstruction {
  LpModel model;
  ApproxReport report;
  DiffBoundReport bound;
  Signal prediction;  ///< one-step predictions for n = p..N-1 from true past samples
};

DiffConstruction construct_diff_lp(const Signal& signal, Index p);

using Sampler = std::function<double(double)>;

/// N equidistant samples of `fn` from lo to hi inclusive, tagged with their grid.
Signal sample_uniform(const Sampler& fn, double lo, double hi, Index count);

struct RefinementRow {
  Index samples = 0;
  double mse = 0.0;
  double max_abs_diff = 0.0;
  double bound = 0.0;
};

/// Fixed order, increasing sampling density. Rows follow the order of `sample_counts`;
/// different counts are evaluated concurrently.
std::vector<RefinementRow> refinement_experiment(const Sampler& fn, double lo, double hi, Index p,
                                                 std::span<const Index> sample_counts);

struct OrderSweepRow {
  Index order = 0;
  double mse = 0.0;
};

/// Fixed signal, varying order.
std::vector<OrderSweepRow> order_sweep(const Signal& signal, std::span<const Index> orders);

}  // namespace lplab
