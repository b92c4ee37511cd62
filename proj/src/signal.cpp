#include <lplab/signal.hpp>

#include <cmath>
#include <string>

namespace lplab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::numeric_overflow: return "numeric-overflow";
    case ErrorKind::numeric_failure: return "numeric-failure";
    case ErrorKind::ill_conditioned: return "ill-conditioned";
    case ErrorKind::unsupported_root: return "unsupported-root";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::internal_invariant: return "internal-invariant";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

NumericOverflow::NumericOverflow(Eigen::Index index)
    : Error(ErrorKind::numeric_overflow,
            "non-finite value produced at sample index " + std::to_string(index)),
      index_(index) {}

namespace detail {

void require_finite(const Eigen::Ref<const Eigen::VectorXd>& values, std::string_view what) {
  for (Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidArgument(std::string(what) + ": non-finite value at index " +
                            std::to_string(i));
    }
  }
}

}  // namespace detail

Signal::Signal(Eigen::VectorXd samples, std::optional<Grid> grid)
    : samples_(std::move(samples)), grid_(grid) {
  if (samples_.size() < 1) throw InvalidArgument("signal: at least one sample required");
  detail::require_finite(samples_, "signal");
  if (grid_ && !(grid_->step > 0.0 && std::isfinite(grid_->step) && std::isfinite(grid_->x0))) {
    throw InvalidArgument("signal: grid step must be positive and finite");
  }
}

Signal::Signal(std::initializer_list<double> samples)
    : Signal(Eigen::Map<const Eigen::VectorXd>(samples.begin(),
                                               static_cast<Index>(samples.size()))) {}

Signal Signal::from(const std::vector<double>& samples) {
  return Signal(Eigen::Map<const Eigen::VectorXd>(samples.data(),
                                                  static_cast<Index>(samples.size())));
}

LpCoefficients::LpCoefficients(Eigen::VectorXd a) : a_(std::move(a)) {
  if (a_.size() < 1) throw InvalidArgument("lp coefficients: order must be at least 1");
  detail::require_finite(a_, "lp coefficients");
}

LpCoefficients::LpCoefficients(std::initializer_list<double> a)
    : LpCoefficients(Eigen::Map<const Eigen::VectorXd>(a.begin(), static_cast<Index>(a.size()))) {}

LpModel::LpModel(LpCoefficients coefficients, Eigen::VectorXd initial)
    : coefficients_(std::move(coefficients)), initial_(std::move(initial)) {
  if (initial_.size() != coefficients_.order()) {
    throw InvalidArgument("lp model: " + std::to_string(initial_.size()) +
                          " initial values for order " + std::to_string(coefficients_.order()));
  }
  detail::require_finite(initial_, "lp model initial values");
}

std::string_view to_string(ApproxMethod method) {
  switch (method) {
    case ApproxMethod::least_squares: return "least-squares";
    case ApproxMethod::dct1: return "dct-1";
    case ApproxMethod::diff_op: return "diff-op";
  }
  return "unknown";
}

}  // namespace lplab
