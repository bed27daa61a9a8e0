#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gaugelab/errors.hpp"
#include "gaugelab/multipolar.hpp"
#include "gaugelab/quadrature.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"
#include "gaugelab/trajectories.hpp"

using namespace gaugelab;

namespace {

Vec3 integral(const VectorField& v) { return v.mean() * v.grid().volume(); }

const SQuadrature& gl32() {
  static const SQuadrature q = gauss_legendre(32);
  return q;
}

}  // namespace

TEST(Quadrature, GaussLegendreOnUnitInterval) {
  for (int n : {1, 2, 5, 32, 64}) {
    const auto q = gauss_legendre(n);
    ASSERT_EQ(q.order(), n);
    double sum = 0, top = 0;
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(q.nodes[i], 0.0);
      EXPECT_LT(q.nodes[i], 1.0);
      sum += q.weights[i];
      top += q.weights[i] * std::pow(q.nodes[i], 2 * n - 1);
    }
    EXPECT_NEAR(sum, 1.0, 1e-14);
    EXPECT_NEAR(top, 1.0 / (2 * n), 1e-14);
  }
  EXPECT_THROW(gauss_legendre(0), InvalidArgument);
}

TEST(Polarization, Oracles) {
  const Grid g = fixtures::small_grid();
  const double sigma = 3 * g.spacing();
  ParticleSet collapsed({{1, 1836, {}, {}}, {-1, 1, {}, {}}}, sigma);
  EXPECT_EQ(l2_norm(polarization_field(collapsed, g, gl32())), 0.0);

  const Vec3 d{0.11, -0.04, 0.07};
  const auto p = fixtures::dipole(g, d);
  EXPECT_LT(fixtures::rel(integral(polarization_field(p, g, gl32())), -1.0 * d), 1e-8);
}

TEST(Polarization, QuadratureTooCoarse) {
  const Grid g = fixtures::small_grid();
  const auto p = fixtures::dipole(g, {0.2, 0.0, 0.0});
  EXPECT_THROW(polarization_field(p, g, gauss_legendre(2), 1e-8), QuadratureTooCoarse);
  EXPECT_NO_THROW(polarization_field(p, g, gl32(), 1e-6));
}

TEST(Magnetization, Oracles) {
  const Grid g = fixtures::small_grid();
  EXPECT_EQ(l2_norm(magnetization_field(fixtures::dipole(g), g, gl32())), 0.0);
  const Vec3 x{0.1, 0.05, 0.0};
  EXPECT_LT(l2_norm(magnetization_field(fixtures::dipole(g, x, 2.0 * x), g, gl32())), 1e-15);

  const Vec3 v{-0.3, 0.6, 0.0};
  const auto p = fixtures::dipole(g, x, v);
  EXPECT_LT(fixtures::rel(integral(magnetization_field(p, g, gl32())), -0.5 * cross(x, v)), 1e-8);
}

TEST(PolarizationTimeDerivative, Oracles) {
  const Grid g = fixtures::small_grid();
  EXPECT_EQ(l2_norm(polarization_time_derivative(fixtures::dipole(g), g, gl32())), 0.0);

  const Vec3 x{0.08, -0.03, 0.05}, v{0.4, 0.7, -0.2};
  const auto p = fixtures::dipole(g, x, v);
  const auto dp = polarization_time_derivative(p, g, gl32());
  EXPECT_LT(fixtures::rel(integral(dp), -1.0 * v), 1e-8);

  // centred differences of P converge to it at second order
  auto fd_error = [&](double h) {
    const auto plus = polarization_field(fixtures::dipole(g, x + h * v, v), g, gl32());
    const auto minus = polarization_field(fixtures::dipole(g, x - h * v, v), g, gl32());
    return relative_l2((plus - minus) * (0.5 / h), dp);
  };
  EXPECT_NEAR(fd_error(0.02) / fd_error(0.01), 4.0, 0.3);
}

TEST(Identities, ChargeAndLongitudinalForReferenceAtoms) {
  const Grid g = fixtures::small_grid();
  for (const auto& p : {fixtures::dipole(g, {0.1, 0.03, -0.02}), fixtures::three_particle(g), fixtures::z4_atom(g)}) {
    const auto c = verify_charge_identity(p, g, gl32());
    EXPECT_TRUE(c.pass()) << c.residual;
    EXPECT_LT(c.residual, 1e-6);
    const auto l = verify_longitudinal_consistency(p, g, gl32());
    EXPECT_LT(l.residual, 1e-6);
    const auto d = verify_displacement_transverse(p, g, gl32(), random_transverse_field(g, 3, 3, 0.5));
    EXPECT_LT(d.residual, 1e-6);
  }
}

TEST(Identities, CurrentForMovingAtoms) {
  const Grid g = fixtures::small_grid();
  const auto orbit = circular_orbit_trajectory(g, 3 * g.spacing(), 0.15, 4.0)(0.2).particles;
  for (const auto& p : {orbit, fixtures::three_particle(g), fixtures::z4_atom(g)}) {
    const auto r = verify_current_identity(p, g, gl32());
    EXPECT_LT(r.residual, 1e-6) << r.lhs;
  }
  const auto still = verify_current_identity(fixtures::dipole(g), g, gl32());
  EXPECT_EQ(still.lhs, 0.0);
  EXPECT_TRUE(still.pass());
}

TEST(Identities, QuadratureConvergence) {
  const Grid g = fixtures::small_grid();
  const auto p = fixtures::z4_atom(g);
  double prev = 1.0;
  for (int n : {2, 4, 8}) {
    const double r = verify_charge_identity(p, g, gauss_legendre(n)).residual;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Identities, CentreOfMassReference) {
  // Flag-gated general form: reference point at the centre of mass.
  const Grid g = fixtures::small_grid();
  ParticleSet p({{1, 4, {0.02, -0.01, 0.03}, {0.05, 0.1, 0}},
                 {-1, 1, {-0.1, 0.06, 0.02}, {0.3, -0.5, 0.2}}},
                3 * g.spacing(), false);
  EXPECT_LT(verify_charge_identity(p, g, gl32()).residual, 1e-6);
  EXPECT_LT(verify_current_identity(p, g, gl32()).residual, 1e-6);
}
