#pragma once

#include <lplab/basis.hpp>
#include <lplab/signal.hpp>

#include <optional>
#include <vector>

namespace lplab {

/// Weights b_0..b_{N-1} of the cosine interpolant
///   f(n) = b_0 + sum_{k=1}^{N-1} b_k cos(n * pi * k / (N - 1)).
class Dct1Coefficients {
 public:
  explicit Dct1Coefficients(Eigen::VectorXd b);

  const Eigen::VectorXd& weights() const noexcept { return b_; }
  Index length() const noexcept { return b_.size(); }
  double operator[](Index k) const { return b_[k]; }
  /// Frequency of basis k: pi * k / (N - 1), exactly pi for the last one.
  double theta(Index k) const;
  /// theta(k) is 0 or pi.
  bool on_real_axis(Index k) const noexcept { return k == 0 || k == b_.size() - 1; }

 private:
  Eigen::VectorXd b_;
};

/// cos(n * pi * k / (N - 1)) with the argument reduced modulo 2 pi in integers.
double dct1_cosine(Index n, Index k, Index length);

Dct1Coefficients dct1_forward(const Signal& signal);

/// Evaluates the cosine interpolant at n = 0..count-1; count may exceed N.
Signal dct1_synthesize(const Dct1Coefficients& coeffs, Index count);

struct SelectionResult {
  std::vector<Index> selected;  ///< descending |b|, ties to the smaller index
  std::vector<Index> rejected;  ///< remaining nonzero indices, ascending
  double bound = 0.0;           ///< sum of b^2 over rejected
};

/// Number of coefficients with |b_k| > zero_tol (default 1e-12 * max |b|).
Index count_nonzero(const Dct1Coefficients& coeffs, std::optional<double> zero_tol = std::nullopt);

/// Keeps the p largest-magnitude nonzero weights.
SelectionResult select_top_p(const Dct1Coefficients& coeffs, Index p,
                             std::optional<double> zero_tol = std::nullopt);

/// Sum of b^2 over the nonzero indices not in `selected`.
double rejected_energy(const Dct1Coefficients& coeffs, const std::vector<Index>& selected,
                       std::optional<double> zero_tol = std::nullopt);

struct DctConstruction {
  LpModel model;
  ApproxReport report;
  std::vector<BasisTerm> bases;
  Signal approximation;  ///< the selected-cosine approximant over n = 0..N-1
};

/// Recurrence whose characteristic roots are e^{+-i theta_k} for the selected k, seeded
/// with the approximant's first q values. mse is measured over all N samples against the
/// full inverse transform of coeffs.
DctConstruction construct_lp_from_selection(const Dct1Coefficients& coeffs,
                                            const SelectionResult& selection);

/// forward transform, top-p selection and construction in one step. mse is against signal itself.
DctConstruction construct_dct_lp(const Signal& signal, Index p);

}  // namespace lplab
