#pragma once

#include <lplab/signal.hpp>

#include <Eigen/Core>

#include <complex>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace lplab {

/// Monic real polynomial x^p + c_1 x^{p-1} + ... + c_p, stored highest degree first.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(Eigen::VectorXd coefficients);

  const Eigen::VectorXd& coefficients() const noexcept { return c_; }
  Index degree() const noexcept { return c_.size() - 1; }
  std::complex<double> operator()(std::complex<double> x) const;
  double operator()(double x) const;
  std::string to_string() const;

 private:
  Eigen::VectorXd c_;
};

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Characteristic roots of a real recurrence. Complex roots come in conjugate pairs of
/// equal multiplicity; multiplicities sum to the order.
class RootSet {
 public:
  explicit RootSet(std::vector<Root> roots);

  const std::vector<Root>& roots() const noexcept { return roots_; }
  Index total_multiplicity() const noexcept { return total_; }

 private:
  std::vector<Root> roots_;
  Index total_ = 0;
};

/// One interpolation basis pair n^k rho^n cos(n theta), n^k rho^n sin(n theta), in the
/// canonical fold rho > 0, theta in [0, pi]. A negative real root -r is (r, pi).
class BasisTerm {
 public:
  BasisTerm(double rho, double theta, int power);

  /// Folds an arbitrary (signed rho, any theta) into canonical form.
  static BasisTerm canonical(double rho, double theta, int power);

  double rho() const noexcept { return rho_; }
  double theta() const noexcept { return theta_; }
  int power() const noexcept { return power_; }

  /// theta is 0 or pi: only the cosine member is a real basis function.
  bool on_real_axis() const noexcept;
  /// Number of real basis functions this term contributes (1 or 2).
  Index dimension() const noexcept { return on_real_axis() ? 1 : 2; }

  friend auto operator<=>(const BasisTerm&, const BasisTerm&) = default;

 private:
  double rho_;
  double theta_;
  int power_;
};

Index basis_count(std::span<const BasisTerm> bases);

struct WeightedTerm {
  BasisTerm basis;
  double b = 0.0;  // cosine weight
  double c = 0.0;  // sine weight, forced to 0 on the real axis
};

/// f(n) = sum_terms n^k rho^n (b cos(n theta) + c sin(n theta)).
class WeightedExpansion {
 public:
  explicit WeightedExpansion(std::vector<WeightedTerm> terms);

  const std::vector<WeightedTerm>& terms() const noexcept { return terms_; }
  std::vector<BasisTerm> bases() const;

 private:
  std::vector<WeightedTerm> terms_;
};

MonicPolynomial characteristic_polynomial(const LpCoefficients& coeffs);

inline constexpr double default_cluster_tol = 1e-7;

/// All roots of `poly` via companion-matrix eigenvalues. Roots closer than
/// cluster_tol * max(1, |r|) merge into their centroid with summed multiplicity.
RootSet find_roots(const MonicPolynomial& poly, double cluster_tol = default_cluster_tol);

std::vector<BasisTerm> roots_to_bases(const RootSet& roots);

/// Root multiset implied by a basis list (the inverse of roots_to_bases).
RootSet bases_to_roots(std::span<const BasisTerm> bases);

LpCoefficients bases_to_coefficients(std::span<const BasisTerm> bases);

inline constexpr double max_weight_condition = 1e12;

struct SolvedWeights {
  WeightedExpansion expansion;
  double condition_estimate;
};

/// Weights reproducing f(0)..f(p-1) = initial from the given bases.
/// Throws IllConditioned when the estimated condition number exceeds 1e12.
SolvedWeights solve_weights(std::span<const BasisTerm> bases,
                            const Eigen::Ref<const Eigen::VectorXd>& initial);

Signal synthesize(const WeightedExpansion& expansion, Index count);

}  // namespace lplab
