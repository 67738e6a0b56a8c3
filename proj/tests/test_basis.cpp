#include "aledg/basis.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace aledg;

namespace {

TEST(Basis, PointValues) {
  EXPECT_DOUBLE_EQ(eval_basis(0, -0.3), 1.0);
  EXPECT_DOUBLE_EQ(eval_basis(0, 0.7), 1.0);
  EXPECT_DOUBLE_EQ(eval_basis(1, 1.0), std::sqrt(3.0));
  EXPECT_THROW(eval_basis(4, 0.0), std::out_of_range);
}

TEST(Basis, DerivativeValues) {
  EXPECT_DOUBLE_EQ(eval_basis_deriv(0, 0.4), 0.0);
  EXPECT_DOUBLE_EQ(eval_basis_deriv(1, -0.9), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(eval_basis_deriv(2, 0.0), 0.0);
  EXPECT_THROW(eval_basis_deriv(5, 0.0), std::out_of_range);
}

TEST(Basis, DerivativeMatchesFiniteDifference) {
  for (int m = 0; m <= 3; ++m) {
    for (double xi : {-0.9, -0.3, 0.1, 0.64, 0.98}) {
      const double h = 1e-6;
      const double fd = (eval_basis(m, xi + h) - eval_basis(m, xi - h)) / (2.0 * h);
      EXPECT_NEAR(eval_basis_deriv(m, xi), fd, 1e-8);
    }
  }
}

TEST(Basis, OrthogonalityUnderGauss4) {
  const QuadratureRule& rule = gauss_rule(4);
  for (int l = 0; l <= 3; ++l) {
    for (int m = 0; m <= 3; ++m) {
      double acc = 0.0;
      for (int q = 0; q < rule.n; ++q)
        acc += rule.weights[q] * eval_basis(l, rule.points[q]) * eval_basis(m, rule.points[q]);
      EXPECT_NEAR(acc, l == m ? 2.0 : 0.0, 1e-13) << l << " " << m;
    }
  }
}

TEST(Basis, GaussRuleBasics) {
  const QuadratureRule& r1 = gauss_rule(1);
  EXPECT_EQ(r1.n, 1);
  EXPECT_DOUBLE_EQ(r1.points[0], 0.0);
  EXPECT_DOUBLE_EQ(r1.weights[0], 2.0);

  const QuadratureRule& r2 = gauss_rule(2);
  EXPECT_NEAR(r2.points[1], 1.0 / std::sqrt(3.0), 1e-16);
  EXPECT_DOUBLE_EQ(r2.weights[0], 1.0);

  EXPECT_THROW(gauss_rule(0), std::out_of_range);
  EXPECT_THROW(gauss_rule(6), std::out_of_range);
}

TEST(Basis, GaussExactOnMonomials) {
  // n points integrate xi^d exactly for d <= 2n-1
  for (int n = 1; n <= 5; ++n) {
    const QuadratureRule& rule = gauss_rule(n);
    double wsum = 0.0;
    for (int q = 0; q < rule.n; ++q) wsum += rule.weights[q];
    EXPECT_NEAR(wsum, 2.0, 1e-14);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double acc = 0.0;
      for (int q = 0; q < rule.n; ++q) acc += rule.weights[q] * std::pow(rule.points[q], d);
      const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
      EXPECT_NEAR(acc, exact, 1e-14) << "n=" << n << " d=" << d;
    }
  }
  // 3-point rule integrates xi^4 to 2/5
  const QuadratureRule& r3 = gauss_rule(3);
  double acc = 0.0;
  for (int q = 0; q < r3.n; ++q) acc += r3.weights[q] * std::pow(r3.points[q], 4);
  EXPECT_NEAR(acc, 0.4, 1e-15);
}

TEST(Basis, NodalModalConstant) {
  for (int k = 0; k <= 3; ++k) {
    std::array<double, 4> nodal{};
    for (int i = 0; i <= k; ++i) nodal[i] = 3.25;
    const std::array<double, 4> modal = nodal_to_modal(nodal, k);
    EXPECT_NEAR(modal[0], 3.25, 1e-14);
    for (int m = 1; m <= k; ++m) EXPECT_NEAR(modal[m], 0.0, 1e-14);
  }
}

TEST(Basis, ModalToNodalLinearMode) {
  const NodalModalMap& map = nodal_modal_map(2);
  std::array<double, 4> modal{0.0, 1.0, 0.0, 0.0};
  const std::array<double, 4> nodal = modal_to_nodal(modal, 2);
  for (int i = 0; i <= 2; ++i) EXPECT_NEAR(nodal[i], std::sqrt(3.0) * map.nodes[i], 1e-15);
}

TEST(Basis, NodalModalRoundTrip) {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int k = 0; k <= 3; ++k) {
    for (int trial = 0; trial < 50; ++trial) {
      std::array<double, 4> modal{};
      for (int m = 0; m <= k; ++m) modal[m] = dist(rng);
      const std::array<double, 4> back = nodal_to_modal(modal_to_nodal(modal, k), k);
      for (int m = 0; m <= k; ++m) EXPECT_NEAR(back[m], modal[m], 1e-12);
    }
  }
}

TEST(Basis, L2ProjectKnownExpansions) {
  // f(xi) = xi at degree 1: (0, 1/sqrt 3)
  const auto lin = l2_project([](double xi) { return xi; }, 1);
  EXPECT_NEAR(lin[0], 0.0, 1e-15);
  EXPECT_NEAR(lin[1], 1.0 / std::sqrt(3.0), 1e-15);

  const auto cst = l2_project([](double) { return -4.5; }, 3);
  EXPECT_NEAR(cst[0], -4.5, 1e-14);
  for (int m = 1; m <= 3; ++m) EXPECT_NEAR(cst[m], 0.0, 1e-14);

  // f(xi) = xi^2 at degree 2: (1/3, 0, 2/(3 sqrt 5)) from the Legendre
  // expansion xi^2 = P0/3 + 2 P2/3
  const auto quad = l2_project([](double xi) { return xi * xi; }, 2);
  EXPECT_NEAR(quad[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(quad[1], 0.0, 1e-15);
  EXPECT_NEAR(quad[2], 2.0 / (3.0 * std::sqrt(5.0)), 1e-15);
}

TEST(Basis, L2ProjectReproducesPolynomials) {
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int k = 0; k <= 3; ++k) {
    std::array<double, 4> coeff{};
    for (int m = 0; m <= k; ++m) coeff[m] = dist(rng);
    auto poly = [&](double xi) {
      double v = 0.0;
      for (int m = 0; m <= k; ++m) v += coeff[m] * eval_basis(m, xi);
      return v;
    };
    const auto modal = l2_project(poly, k);
    for (int m = 0; m <= k; ++m) EXPECT_NEAR(modal[m], coeff[m], 1e-13);
  }
}

}  // namespace
