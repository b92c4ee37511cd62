#include <lplab/dct.hpp>
#include <lplab/recurrence.hpp>
#include <lplab/trig.hpp>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

namespace lplab {

namespace {

double default_zero_tol(const Dct1Coefficients& coeffs) {
  return 1e-12 * coeffs.weights().cwiseAbs().maxCoeff();
}

std::vector<Index> nonzero_indices(const Dct1Coefficients& coeffs, std::optional<double> zero_tol) {
  const double tol = zero_tol.value_or(default_zero_tol(coeffs));
  std::vector<Index> out;
  for (Index k = 0; k < coeffs.length(); ++k) {
    if (std::abs(coeffs[k]) > tol) out.push_back(k);
  }
  return out;
}

Eigen::VectorXd evaluate_subset(const Dct1Coefficients& coeffs, const std::vector<Index>& subset,
                                Index count) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(count);
  for (Index n = 0; n < count; ++n) {
    for (Index k : subset) f[n] += coeffs[k] * dct1_cosine(n, k, coeffs.length());
  }
  return f;
}

}  // namespace

Dct1Coefficients::Dct1Coefficients(Eigen::VectorXd b) : b_(std::move(b)) {
  if (b_.size() < 2) throw InvalidArgument("dct-1: at least two coefficients required");
  detail::require_finite(b_, "dct-1 coefficients");
}

double Dct1Coefficients::theta(Index k) const {
  if (k == b_.size() - 1) return std::numbers::pi;
  return std::numbers::pi * static_cast<double>(k) / static_cast<double>(b_.size() - 1);
}

double dct1_cosine(Index n, Index k, Index length) {
  const Index period = 2 * (length - 1);
  const Index turns = (n % period) * (k % period) % period;
  return cos_sin(std::numbers::pi * static_cast<double>(turns) /
                 static_cast<double>(length - 1))
      .cos;
}

Dct1Coefficients dct1_forward(const Signal& signal) {
  const Index N = signal.size();
  if (N < 2) throw InvalidArgument("dct1_forward: at least two samples required");
  const Eigen::VectorXd& f = signal.samples();
  // Orthogonality of the cosines under endpoint-halved weights gives
  //   b_k = (w_k / (N - 1)) * sum_n c_n f(n) cos(pi n k / (N - 1)),
  // with c_n = 1/2 at both ends, 1 inside, and w_k = 1 at k = 0, N-1, 2 inside.
  Eigen::VectorXd b(N);
  for (Index k = 0; k < N; ++k) {
    double acc = 0.0;
    for (Index n = 0; n < N; ++n) {
      const double end_weight = (n == 0 || n == N - 1) ? 0.5 : 1.0;
      acc += end_weight * f[n] * dct1_cosine(n, k, N);
    }
    const double freq_weight = (k == 0 || k == N - 1) ? 1.0 : 2.0;
    b[k] = freq_weight * acc / static_cast<double>(N - 1);
  }
  return Dct1Coefficients(std::move(b));
}

Signal dct1_synthesize(const Dct1Coefficients& coeffs, Index count) {
  if (count < 1) throw InvalidArgument("dct1_synthesize: count must be positive");
  std::vector<Index> all(static_cast<std::size_t>(coeffs.length()));
  std::iota(all.begin(), all.end(), Index{0});
  return Signal(evaluate_subset(coeffs, all, count));
}

Index count_nonzero(const Dct1Coefficients& coeffs, std::optional<double> zero_tol) {
  return static_cast<Index>(nonzero_indices(coeffs, zero_tol).size());
}

SelectionResult select_top_p(const Dct1Coefficients& coeffs, Index p, std::optional<double> zero_tol) {
  std::vector<Index> candidates = nonzero_indices(coeffs, zero_tol);
  const Index available = static_cast<Index>(candidates.size());
  if (p < 1 || p > available) {
    throw InvalidArgument("select_top_p: p = " + std::to_string(p) + " must lie in [1, N_I] with N_I = " +
                          std::to_string(available) + " nonzero coefficients");
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](Index a, Index b) {
    return std::abs(coeffs[a]) > std::abs(coeffs[b]);
  });
  SelectionResult result;
  result.selected.assign(candidates.begin(), candidates.begin() + p);
  result.rejected.assign(candidates.begin() + p, candidates.end());
  std::sort(result.rejected.begin(), result.rejected.end());
  for (Index k : result.rejected) result.bound += coeffs[k] * coeffs[k];
  return result;
}

double rejected_energy(const Dct1Coefficients& coeffs, const std::vector<Index>& selected,
                       std::optional<double> zero_tol) {
  double total = 0.0;
  for (Index k : nonzero_indices(coeffs, zero_tol)) {
    if (std::find(selected.begin(), selected.end(), k) == selected.end()) total += coeffs[k] * coeffs[k];
  }
  return total;
}

namespace {

DctConstruction build_construction(const Dct1Coefficients& coeffs, const SelectionResult& selection,
                                   const Eigen::VectorXd& target) {
  const Index N = coeffs.length();
  if (selection.selected.empty()) throw InvalidArgument("construct: empty selection");
  std::vector<BasisTerm> bases;
  for (Index k : selection.selected) {
    if (k < 0 || k >= N) throw InvalidArgument("construct: selected index out of range");
    bases.emplace_back(1.0, coeffs.theta(k), 0);
  }
  LpCoefficients lp = bases_to_coefficients(bases);
  const Index q = lp.order();

  const Eigen::VectorXd seed = evaluate_subset(coeffs, selection.selected, q);
  Signal approximation(evaluate_subset(coeffs, selection.selected, N));
  Signal residual(target - approximation.samples());

  ApproxReport report{
      .mse = mean_square(residual),
      .bound = selection.bound,
      .residuals = std::move(residual),
      .method = ApproxMethod::dct1,
      .order = q,
  };
  return {LpModel(std::move(lp), seed), std::move(report), std::move(bases), std::move(approximation)};
}

}  // namespace

DctConstruction construct_lp_from_selection(const Dct1Coefficients& coeffs,
                                            const SelectionResult& selection) {
  return build_construction(coeffs, selection, dct1_synthesize(coeffs, coeffs.length()).samples());
}

DctConstruction construct_dct_lp(const Signal& signal, Index p) {
  const Dct1Coefficients coeffs = dct1_forward(signal);
  return build_construction(coeffs, select_top_p(coeffs, p), signal.samples());
}

}  // namespace lplab
