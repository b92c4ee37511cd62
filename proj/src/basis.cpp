#include <lplab/basis.hpp>
#include <lplab/trig.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace lplab {

namespace {

constexpr double pi = std::numbers::pi;

double scale_of(std::complex<double> z) { return std::max(1.0, std::abs(z)); }

// Multiplies `poly` (highest degree first) by the monic factor `factor`.
Eigen::VectorXd multiply(const Eigen::VectorXd& poly, const Eigen::VectorXd& factor) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(poly.size() + factor.size() - 1);
  for (Index i = 0; i < poly.size(); ++i) out.segment(i, factor.size()) += poly[i] * factor;
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::complex<double> newton_polish(const MonicPolynomial& poly, std::complex<double> z) {
  const Eigen::VectorXd& c = poly.coefficients();
  for (int step = 0; step < 4; ++step) {
    std::complex<double> value = c[0];
    std::complex<double> slope = 0.0;
    for (Index i = 1; i < c.size(); ++i) {
      slope = slope * z + value;
      value = value * z + c[i];
    }
    if (value == 0.0 || slope == 0.0) break;
    const std::complex<double> next = z - value / slope;
    if (!(std::abs(poly(next)) < std::abs(value))) break;
    z = next;
  }
  return z;
}

}  // namespace

MonicPolynomial::MonicPolynomial(Eigen::VectorXd coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 2) throw InvalidArgument("polynomial: degree must be at least 1");
  if (c_[0] != 1.0) throw InvalidArgument("polynomial: leading coefficient must be exactly 1");
  detail::require_finite(c_, "polynomial");
}

std::complex<double> MonicPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (Index i = 0; i < c_.size(); ++i) acc = acc * x + c_[i];
  return acc;
}

double MonicPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (Index i = 0; i < c_.size(); ++i) acc = acc * x + c_[i];
  return acc;
}

std::string MonicPolynomial::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (Index i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ']';
  return os.str();
}

RootSet::RootSet(std::vector<Root> roots) : roots_(std::move(roots)) {
  for (const Root& r : roots_) {
    if (r.multiplicity < 1) throw InvalidArgument("root set: multiplicity must be positive");
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) {
      throw InvalidArgument("root set: non-finite root");
    }
    total_ += r.multiplicity;
  }
  // Conjugate symmetry: every non-real root must be matched exactly.
  for (const Root& r : roots_) {
    if (r.value.imag() == 0.0) continue;
    const auto mate = std::find_if(roots_.begin(), roots_.end(), [&](const Root& s) {
      return s.value == std::conj(r.value) && s.multiplicity == r.multiplicity;
    });
    if (mate == roots_.end()) throw InvalidArgument("root set: complex root without its conjugate");
  }
}

BasisTerm::BasisTerm(double rho, double theta, int power) : rho_(rho), theta_(theta), power_(power) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidArgument("basis: rho must be positive and finite");
  if (!(theta >= 0.0 && theta <= pi)) throw InvalidArgument("basis: theta must lie in [0, pi]");
  if (power < 0) throw InvalidArgument("basis: power must be nonnegative");
}

BasisTerm BasisTerm::canonical(double rho, double theta, int power) {
  if (!std::isfinite(rho) || !std::isfinite(theta)) throw InvalidArgument("basis: non-finite parameter");
  if (rho < 0.0) {
    rho = -rho;
    theta += pi;
  }
  theta = std::remainder(theta, 2.0 * pi);  // (-pi, pi]
  theta = std::abs(theta);
  if (theta > pi) theta = pi;
  return BasisTerm(rho, theta, power);
}

bool BasisTerm::on_real_axis() const noexcept { return theta_ == 0.0 || theta_ == pi; }

Index basis_count(std::span<const BasisTerm> bases) {
  Index total = 0;
  for (const BasisTerm& term : bases) total += term.dimension();
  return total;
}

WeightedExpansion::WeightedExpansion(std::vector<WeightedTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidArgument("expansion: at least one term required");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    WeightedTerm& t = terms_[i];
    if (!std::isfinite(t.b) || !std::isfinite(t.c)) throw InvalidArgument("expansion: non-finite weight");
    if (t.basis.on_real_axis()) t.c = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      if (terms_[j].basis == t.basis) throw InvalidArgument("expansion: duplicate basis term");
    }
  }
}

std::vector<BasisTerm> WeightedExpansion::bases() const {
  std::vector<BasisTerm> out;
  out.reserve(terms_.size());
  for (const WeightedTerm& t : terms_) out.push_back(t.basis);
  return out;
}

MonicPolynomial characteristic_polynomial(const LpCoefficients& coeffs) {
  Eigen::VectorXd c(coeffs.order() + 1);
  c[0] = 1.0;
  c.tail(coeffs.order()) = -coeffs.weights();
  return MonicPolynomial(std::move(c));
}

RootSet find_roots(const MonicPolynomial& poly, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw InvalidArgument("find_roots: cluster tolerance must be positive");
  const Index p = poly.degree();
  const Eigen::VectorXd& c = poly.coefficients();

  std::vector<std::complex<double>> raw;
  if (p == 1) {
    raw.emplace_back(-c[1], 0.0);
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    companion.row(0) = -c.tail(p).transpose();
    companion.diagonal(-1).setOnes();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      throw NumericFailure("find_roots: eigenvalue iteration did not converge for " + poly.to_string());
    }
    for (Index i = 0; i < p; ++i) raw.push_back(solver.eigenvalues()[i]);
  }

  double scale = 1.0;
  for (auto z : raw) scale = std::max(scale, std::abs(z));
  for (auto& z : raw) {
    if (std::abs(z) <= cluster_tol * scale) z = 0.0;
    if (std::abs(z.imag()) <= cluster_tol * scale_of(z)) z.imag(0.0);
  }

  DisjointSets sets(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double reach = cluster_tol * std::max(scale_of(raw[i]), scale_of(raw[j]));
      if (std::abs(raw[i] - raw[j]) <= reach) sets.join(i, j);
    }
  }
  std::map<std::size_t, std::vector<std::complex<double>>> clusters;
  for (std::size_t i = 0; i < raw.size(); ++i) clusters[sets.find(i)].push_back(raw[i]);

  std::vector<Root> upper;
  std::vector<Root> real;
  int lower_total = 0;
  for (const auto& [_, members] : clusters) {
    std::complex<double> centroid = 0.0;
    for (auto z : members) centroid += z;
    centroid /= static_cast<double>(members.size());
    const int m = static_cast<int>(members.size());
    if (std::abs(centroid.imag()) <= cluster_tol * scale_of(centroid)) {
      centroid.imag(0.0);
      if (m == 1 && centroid != 0.0) centroid = newton_polish(poly, centroid).real();
      real.push_back({centroid, m});
    } else if (centroid.imag() > 0.0) {
      if (m == 1) {
        const auto polished = newton_polish(poly, centroid);
        if (polished.imag() > 0.0) centroid = polished;
      }
      upper.push_back({centroid, m});
    } else {
      lower_total += m;
    }
  }
  int upper_total = 0;
  for (const Root& r : upper) upper_total += r.multiplicity;
  if (upper_total != lower_total) {
    throw NumericFailure("find_roots: could not pair complex roots into conjugates for " +
                         poly.to_string());
  }

  auto by_position = [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  };
  std::sort(real.begin(), real.end(), by_position);
  std::sort(upper.begin(), upper.end(), by_position);

  std::vector<Root> roots = real;
  for (const Root& r : upper) {
    roots.push_back(r);
    roots.push_back({std::conj(r.value), r.multiplicity});
  }

  for (const Root& r : roots) {
    const double limit = 1e-6 * std::pow(1.0 + std::abs(r.value), static_cast<double>(p));
    if (!(std::abs(poly(r.value)) <= limit)) {
      std::ostringstream os;
      os.precision(17);
      os << "find_roots: root " << r.value << " misses residual tolerance for " << poly.to_string();
      throw NumericFailure(os.str());
    }
  }
  return RootSet(std::move(roots));
}

std::vector<BasisTerm> roots_to_bases(const RootSet& roots) {
  std::vector<BasisTerm> bases;
  for (const Root& r : roots.roots()) {
    if (r.value == 0.0) {
      throw UnsupportedRoot(
          "roots_to_bases: zero characteristic root; the recurrence order is lower than its "
          "coefficient count (a_p = 0), reduce the order");
    }
    if (r.value.imag() < 0.0) continue;
    double rho = std::abs(r.value);
    double theta = 0.0;
    if (r.value.imag() == 0.0) {
      rho = std::abs(r.value.real());
      theta = r.value.real() > 0.0 ? 0.0 : pi;
    } else {
      theta = std::arg(r.value);
    }
    for (int k = 0; k < r.multiplicity; ++k) bases.emplace_back(rho, theta, k);
  }
  return bases;
}

RootSet bases_to_roots(std::span<const BasisTerm> bases) {
  if (bases.empty()) throw InvalidArgument("bases: empty basis list");
  // Group by (rho, theta); the powers within a group must be exactly 0..m-1.
  std::map<std::pair<double, double>, std::vector<int>> groups;
  std::vector<std::pair<double, double>> order;
  for (const BasisTerm& term : bases) {
    auto key = std::make_pair(term.rho(), term.theta());
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    if (std::find(it->second.begin(), it->second.end(), term.power()) != it->second.end()) {
      throw InvalidArgument("bases: duplicate basis term (rho=" + std::to_string(term.rho()) +
                            ", theta=" + std::to_string(term.theta()) +
                            ", power=" + std::to_string(term.power()) + ")");
    }
    it->second.push_back(term.power());
  }
  std::vector<Root> roots;
  for (const auto& key : order) {
    std::vector<int> powers = groups[key];
    std::sort(powers.begin(), powers.end());
    for (std::size_t k = 0; k < powers.size(); ++k) {
      if (powers[k] != static_cast<int>(k)) {
        throw InvalidArgument("bases: powers for rho=" + std::to_string(key.first) +
                              ", theta=" + std::to_string(key.second) +
                              " must run contiguously from 0");
      }
    }
    const int m = static_cast<int>(powers.size());
    const auto [rho, theta] = key;
    if (theta == 0.0) {
      roots.push_back({rho, m});
    } else if (theta == pi) {
      roots.push_back({-rho, m});
    } else {
      const auto [cos_t, sin_t] = cos_sin(theta);
      const std::complex<double> z(rho * cos_t, rho * sin_t);
      roots.push_back({z, m});
      roots.push_back({std::conj(z), m});
    }
  }
  return RootSet(std::move(roots));
}

LpCoefficients bases_to_coefficients(std::span<const BasisTerm> bases) {
  const RootSet roots = bases_to_roots(bases);
  Eigen::VectorXd poly = Eigen::VectorXd::Ones(1);
  for (const Root& r : roots.roots()) {
    if (r.value.imag() < 0.0) continue;
    Eigen::VectorXd factor;
    if (r.value.imag() == 0.0) {
      factor = Eigen::Vector2d(1.0, -r.value.real());
    } else {
      // (x - z)(x - conj z) = x^2 - 2 Re z x + |z|^2
      factor = Eigen::Vector3d(1.0, -2.0 * r.value.real(), std::norm(r.value));
    }
    for (int k = 0; k < r.multiplicity; ++k) poly = multiply(poly, factor);
  }
  return LpCoefficients(-poly.tail(poly.size() - 1));
}

SolvedWeights solve_weights(std::span<const BasisTerm> bases,
                            const Eigen::Ref<const Eigen::VectorXd>& initial) {
  (void)bases_to_roots(bases);  // validates duplicates and power contiguity
  const Index p = basis_count(bases);
  if (initial.size() != p) {
    throw InvalidArgument("solve_weights: " + std::to_string(initial.size()) +
                          " initial values for " + std::to_string(p) + " basis functions");
  }
  detail::require_finite(initial, "solve_weights initial values");

  Eigen::MatrixXd system(p, p);
  Index col = 0;
  for (const BasisTerm& term : bases) {
    for (Index n = 0; n < p; ++n) {
      const double nd = static_cast<double>(n);
      const double radial = std::pow(nd, term.power()) * std::pow(term.rho(), nd);
      const auto [cos_t, sin_t] = cos_sin(nd * term.theta());
      system(n, col) = radial * cos_t;
      if (!term.on_real_axis()) system(n, col + 1) = radial * sin_t;
    }
    col += term.dimension();
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(condition <= max_weight_condition)) {
    throw IllConditioned("solve_weights: basis evaluation system is singular or ill-conditioned "
                         "(condition estimate " + std::to_string(condition) + ")",
                         condition);
  }
  const Eigen::VectorXd w = lu.solve(initial);

  std::vector<WeightedTerm> terms;
  col = 0;
  for (const BasisTerm& term : bases) {
    terms.push_back({term, w[col], term.on_real_axis() ? 0.0 : w[col + 1]});
    col += term.dimension();
  }
  return {WeightedExpansion(std::move(terms)), condition};
}

Signal synthesize(const WeightedExpansion& expansion, Index count) {
  if (count < 1) throw InvalidArgument("synthesize: count must be positive");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(count);
  for (Index n = 0; n < count; ++n) {
    const double nd = static_cast<double>(n);
    double value = 0.0;
    for (const WeightedTerm& t : expansion.terms()) {
      const double radial = std::pow(nd, t.basis.power()) * std::pow(t.basis.rho(), nd);
      const auto [cos_t, sin_t] = cos_sin(nd * t.basis.theta());
      value += radial * (t.b * cos_t + t.c * sin_t);
    }
    if (!std::isfinite(value)) throw NumericOverflow(n);
    f[n] = value;
  }
  return Signal(std::move(f));
}

}  // namespace lplab
