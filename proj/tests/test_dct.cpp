#include <algorithm>
#include <doctest.h>

#include <lplab/dct.hpp>
#include <lplab/recurrence.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace lplab;
using std::numbers::pi;

TEST_CASE("dct1_forward examples") {
  const Dct1Coefficients flat = dct1_forward(Signal(Eigen::VectorXd::Constant(5, 4.0)));
  CHECK(flat[0] == doctest::Approx(4.0));
  CHECK(flat.weights().tail(4).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK(dct1_forward(Signal{3, 1}).weights() == Eigen::Vector2d(2, 1));
  CHECK(dct1_forward(Signal{1, 0, -1}).weights() == Eigen::Vector3d(0, 1, 0));
  CHECK_THROWS_AS(dct1_forward(Signal{1}), InvalidArgument);
}

TEST_CASE("dct1_forward matches a dense cosine solve") {
  testing::Rng rng(31);
  for (Index N = 2; N <= 40; ++N) {
    const Signal f = testing::uniform_signal(rng, N);
    const Eigen::VectorXd expected = oracle::dct1_by_dense_solve(f.samples());
    CHECK((dct1_forward(f).weights() - expected).cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("dct1_synthesize examples") {
  CHECK(dct1_synthesize(Dct1Coefficients(Eigen::Vector3d(5, 0, 0)), 3).samples() == Eigen::Vector3d(5, 5, 5));
  Eigen::VectorXd expected(5);
  expected << 1, 0, -1, 0, 1;
  CHECK(dct1_synthesize(Dct1Coefficients(Eigen::Vector3d(0, 1, 0)), 5).samples() == expected);
  CHECK(dct1_synthesize(Dct1Coefficients(Eigen::Vector2d(2, 1)), 2).samples() == Eigen::Vector2d(3, 1));
}

TEST_CASE("dct roundtrip on random signals") {
  testing::Rng rng(37);
  std::uniform_int_distribution<Index> len(2, 64);
  for (int trial = 0; trial < 100; ++trial) {
    const Signal f = testing::uniform_signal(rng, len(rng), 10.0);
    const Signal back = dct1_synthesize(dct1_forward(f), f.size());
    CHECK((back.samples() - f.samples()).cwiseAbs().maxCoeff() <= 1e-9 * (1 + f.max_abs()));
  }
}

TEST_CASE("select_top_p examples") {
  Eigen::Vector4d b(0.1, 2.0, -3.0, 0.05);
  SelectionResult s = select_top_p(Dct1Coefficients(b), 2);
  CHECK(s.selected == std::vector<Index>{2, 1});
  CHECK(s.rejected == std::vector<Index>{0, 3});
  CHECK(s.bound == doctest::Approx(0.0125));

  s = select_top_p(Dct1Coefficients(Eigen::Vector3d(5, 0, 0)), 1);
  CHECK(s.selected == std::vector<Index>{0});
  CHECK(s.bound == 0.0);

  s = select_top_p(Dct1Coefficients(Eigen::Vector3d(1, 1, 1)), 2);
  CHECK(s.selected == std::vector<Index>{0, 1});
  CHECK(s.bound == 1.0);

  try {
    select_top_p(Dct1Coefficients(Eigen::Vector3d(5, 0, 0)), 2);
    FAIL("expected invalid argument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("N_I = 1") != std::string::npos);
  }
}

TEST_CASE("top-|b| selection minimizes the rejected energy") {
  testing::Rng rng(41);
  for (Index N = 2; N <= 10; ++N) {
    for (int trial = 0; trial < 5; ++trial) {
      const Dct1Coefficients coeffs = dct1_forward(testing::uniform_signal(rng, N));
      std::vector<Index> support;
      for (Index k = 0; k < N; ++k) {
        if (std::abs(coeffs[k]) > 1e-12 * coeffs.weights().cwiseAbs().maxCoeff()) support.push_back(k);
      }
      for (Index p = 1; p <= static_cast<Index>(support.size()); ++p) {
        const SelectionResult s = select_top_p(coeffs, p);
        CHECK(s.bound <= oracle::min_rejected_energy(coeffs.weights(), support, p) + 1e-15);
        CHECK(s.bound == doctest::Approx(rejected_energy(coeffs, s.selected)));
      }
    }
  }
}

TEST_CASE("construct_lp_from_selection examples") {
  SUBCASE("cos(n pi / 2) is represented exactly") {
    const Dct1Coefficients coeffs = dct1_forward(Signal{1, 0, -1});
    const DctConstruction built = construct_lp_from_selection(coeffs, select_top_p(coeffs, 1));
    CHECK(built.model.coefficients().weights() == Eigen::Vector2d(0, -1));
    CHECK(built.model.initial() == Eigen::Vector2d(1, 0));
    CHECK(built.report.mse == 0.0);
    CHECK(*built.report.bound == 0.0);
    CHECK(built.report.order == 2);
    CHECK(built.report.method == ApproxMethod::dct1);
  }
  SUBCASE("constant") {
    const DctConstruction built = construct_dct_lp(Signal{4, 4, 4, 4}, 1);
    CHECK(built.model.coefficients().weights() == Eigen::VectorXd::Ones(1));
    CHECK(built.model.initial()[0] == doctest::Approx(4));
    CHECK(built.report.mse <= 1e-28);
  }
  SUBCASE("two samples, one basis") {
    const DctConstruction built = construct_dct_lp(Signal{3, 1}, 1);
    CHECK(built.model.coefficients().weights() == Eigen::VectorXd::Ones(1));
    CHECK(built.model.initial()[0] == 2.0);
    CHECK(built.report.mse == 1.0);
    CHECK(*built.report.bound == 1.0);
  }
}

TEST_CASE("dct construction: LP order counts one root per real-axis frequency") {
  testing::Rng rng(43);
  for (Index N = 3; N <= 12; ++N) {
    const Signal f = testing::uniform_signal(rng, N);
    const Dct1Coefficients coeffs = dct1_forward(f);
    const Index all = count_nonzero(coeffs);
    const DctConstruction built = construct_lp_from_selection(coeffs, select_top_p(coeffs, all));
    if (all == N) CHECK(built.model.order() == 2 * N - 2);
    CHECK(built.report.mse <= 1e-16 * f.max_abs() * f.max_abs());
    // the recurrence regenerates the approximant (here: the signal itself)
    const Signal regenerated = iterate(built.model, std::max(N, built.model.order()));
    CHECK((regenerated.samples().head(N) - f.samples()).cwiseAbs().maxCoeff() <= 1e-6 * (1 + f.max_abs()));
  }
}

TEST_CASE("dct construction: bound shrinks as more bases are kept") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Dct1Coefficients coeffs = dct1_forward(testing::uniform_signal(rng, 16));
    double previous = std::numeric_limits<double>::infinity();
    for (Index p = 1; p <= count_nonzero(coeffs); ++p) {
      const double bound = select_top_p(coeffs, p).bound;
      CHECK(bound <= previous);
      previous = bound;
    }
  }
}

TEST_CASE("dct construction: bound holds when only interior weights are rejected") {
  // Interior cosines of the same parity still interact through the endpoints, but with
  // both endpoint weights kept the residual energy cannot exceed the rejected energy.
  testing::Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Index N = 4 + trial % 20;
    const Dct1Coefficients coeffs = dct1_forward(testing::uniform_signal(rng, N));
    std::vector<Index> keep{0, N - 1};
    SelectionResult sel{keep, {}, 0.0};
    for (Index k = 1; k < N - 1; ++k) {
      if (k % 3 == 0) sel.selected.push_back(k);
      else {
        sel.rejected.push_back(k);
        sel.bound += coeffs[k] * coeffs[k];
      }
    }
    const DctConstruction built = construct_lp_from_selection(coeffs, sel);
    CHECK(built.report.mse <= sel.bound + 1e-12);
  }
}

TEST_CASE("dct construction: rejecting both endpoint weights can exceed the bound") {
  // b = (1, 1.5, 1) on N = 3: keep the middle cosine; the residual is 1 + cos(n pi) = (2, 0, 2)
  // with mean square 8/3 against a rejected energy of 2.
  const Dct1Coefficients coeffs(Eigen::Vector3d(1, 1.5, 1));
  const SelectionResult sel = select_top_p(coeffs, 1);
  CHECK(sel.selected == std::vector<Index>{1});
  const DctConstruction built = construct_lp_from_selection(coeffs, sel);
  CHECK(built.report.mse == doctest::Approx(8.0 / 3.0));
  CHECK(*built.report.bound == doctest::Approx(2.0));
  CHECK(built.report.mse > *built.report.bound);
}
