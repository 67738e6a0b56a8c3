#include "aledg/euler.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace aledg;

namespace {

constexpr GasModel kAir{1.4};

TEST(Euler, ToPrimitiveKnownValues) {
  const PrimitiveState a = to_primitive({1.0, 0.0, 2.5}, kAir);
  EXPECT_DOUBLE_EQ(a.rho, 1.0);
  EXPECT_DOUBLE_EQ(a.vel, 0.0);
  EXPECT_DOUBLE_EQ(a.pre, 1.0);

  const PrimitiveState b = to_primitive({2.0, 2.0, 3.5}, kAir);
  EXPECT_DOUBLE_EQ(b.rho, 2.0);
  EXPECT_DOUBLE_EQ(b.vel, 1.0);
  EXPECT_DOUBLE_EQ(b.pre, 1.0);
}

TEST(Euler, ToPrimitiveRejectsNonPhysical) {
  EXPECT_THROW(to_primitive({1.0, 0.0, -1.0}, kAir), NonPhysicalState);
  EXPECT_THROW(to_primitive({-1.0, 0.0, 1.0}, kAir), NonPhysicalState);
  EXPECT_THROW(to_primitive({0.0, 0.0, 1.0}, kAir), NonPhysicalState);
}

TEST(Euler, ToConservedKnownValues) {
  const ConservedState a = to_conserved({1.0, 0.0, 1.0}, kAir);
  EXPECT_DOUBLE_EQ(a.rho, 1.0);
  EXPECT_DOUBLE_EQ(a.mom, 0.0);
  EXPECT_DOUBLE_EQ(a.ener, 2.5);

  // Sod right state
  const ConservedState b = to_conserved({0.125, 0.0, 0.1}, kAir);
  EXPECT_DOUBLE_EQ(b.rho, 0.125);
  EXPECT_NEAR(b.ener, 0.25, 1e-15);
}

TEST(Euler, RoundTripRandomStates) {
  oracles::StateGen gen(21u);
  for (int i = 0; i < 500; ++i) {
    const PrimitiveState w = gen.primitive();
    const PrimitiveState back = to_primitive(to_conserved(w, kAir), kAir);
    EXPECT_NEAR(back.rho, w.rho, 1e-14 * std::abs(w.rho));
    EXPECT_NEAR(back.vel, w.vel, 1e-14 * (1.0 + std::abs(w.vel)));
    // The pressure recovery subtracts the kinetic energy, so rounding is
    // relative to the larger of the two energy contributions.
    const double scale = std::max(w.pre, 0.2 * w.rho * w.vel * w.vel);
    EXPECT_NEAR(back.pre, w.pre, 1e-14 * scale);
  }
}

TEST(Euler, PhysicalFluxKnownValues) {
  const FluxVector f0 = physical_flux(ConservedState{1.0, 0.0, 2.5}, kAir);
  EXPECT_DOUBLE_EQ(f0.rho, 0.0);
  EXPECT_DOUBLE_EQ(f0.mom, 1.0);
  EXPECT_DOUBLE_EQ(f0.ener, 0.0);

  // rho H v = (E + p) v = 4.5 by hand
  const FluxVector f1 = physical_flux(ConservedState{2.0, 2.0, 3.5}, kAir);
  EXPECT_DOUBLE_EQ(f1.rho, 2.0);
  EXPECT_DOUBLE_EQ(f1.mom, 3.0);
  EXPECT_DOUBLE_EQ(f1.ener, 4.5);
}

TEST(Euler, FluxMatchesJacobianRayIntegral) {
  const ConservedState u_ref{1.0, 0.0, 2.5};
  const ConservedState u{2.0, 2.0, 3.5};
  const FluxVector direct = physical_flux(u, kAir);
  const FluxVector integrated = oracles::flux_by_ray_integral(u_ref, u, kAir);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(direct[i], integrated[i], 1e-8);
}

TEST(Euler, AleFluxProperties) {
  oracles::StateGen gen(22u);
  for (int i = 0; i < 200; ++i) {
    const ConservedState u = gen.conserved(kAir);
    const PrimitiveState w = to_primitive(u, kAir);
    // w = 0 reduces to the physical flux
    const FluxVector g0 = ale_flux(u, 0.0, kAir);
    const FluxVector f = physical_flux(u, kAir);
    for (int c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(g0[c], f[c]);
    // contact-moving frame: no mass crosses the face
    EXPECT_NEAR(ale_flux(u, w.vel, kAir).rho, 0.0, 1e-13 * std::abs(u.mom));
  }
  const FluxVector g = ale_flux({1.0, 0.0, 2.5}, 1.0, kAir);
  EXPECT_DOUBLE_EQ(g.rho, -1.0);
  EXPECT_DOUBLE_EQ(g.mom, 1.0);
  EXPECT_DOUBLE_EQ(g.ener, -2.5);
}

TEST(Euler, JacobianMatchesFiniteDifference) {
  oracles::StateGen gen(23u);
  for (int i = 0; i < 100; ++i) {
    const ConservedState u = gen.conserved(kAir);
    const Mat3 exact = flux_jacobian(u, kAir);
    const Mat3 fd = oracles::fd_flux_jacobian(u, kAir);
    const double scale = std::abs(u.ener / u.rho) + 1.0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_NEAR(exact.m[r][c], fd.m[r][c], 1e-5 * scale);
  }
}

TEST(Euler, EigenvaluesSorted) {
  const EigenSystem eig = eigensystem({1.0, 0.0, 1.0}, kAir);
  const double c = std::sqrt(1.4);
  EXPECT_NEAR(eig.lambdas[0], -c, 1e-15);
  EXPECT_NEAR(eig.lambdas[1], 0.0, 1e-15);
  EXPECT_NEAR(eig.lambdas[2], c, 1e-15);
}

TEST(Euler, EigenLeftIsRightInverse) {
  oracles::StateGen gen(24u);
  for (int i = 0; i < 200; ++i) {
    const EigenSystem eig = eigensystem(gen.primitive(), kAir);
    const Mat3 prod = eig.right.mul(eig.left);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        EXPECT_NEAR(prod.m[r][c], r == c ? 1.0 : 0.0, 1e-12) << "state " << i;
  }
}

TEST(Euler, EigenvectorsDiagonalizeFdJacobian) {
  oracles::StateGen gen(25u);
  for (int i = 0; i < 100; ++i) {
    const PrimitiveState w = gen.primitive();
    const ConservedState u = to_conserved(w, kAir);
    const EigenSystem eig = eigensystem(w, kAir);
    const Mat3 a = oracles::fd_flux_jacobian(u, kAir);
    // A r_i = lambda_i r_i columnwise
    const double scale =
        std::abs(w.vel) + std::sqrt(1.4 * w.pre / w.rho) + std::abs(u.ener / u.rho);
    for (int col = 0; col < 3; ++col) {
      const ConservedState r{eig.right.m[0][col], eig.right.m[1][col], eig.right.m[2][col]};
      const ConservedState ar = a.apply(r);
      for (int row = 0; row < 3; ++row)
        EXPECT_NEAR(ar[row], eig.lambdas[col] * r[row], 1e-6 * scale * (1.0 + scale));
    }
  }
}

TEST(Euler, EigensystemRejectsNonPhysical) {
  EXPECT_THROW(eigensystem({1.0, 0.0, -1.0}, kAir), NonPhysicalState);
}

}  // namespace
