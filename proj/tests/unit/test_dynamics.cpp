#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gaugelab/dynamics.hpp"
#include "gaugelab/errors.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"
#include "gaugelab/trajectories.hpp"

using namespace gaugelab;

namespace {

SystemState orbit_state(const Grid& g) {
  const double sigma = 3 * g.spacing();
  const double v = circular_orbit_speed(g, sigma, 0.15);
  return SystemState{ParticleSet({{1, 1836, {}, {}}, {-1, 1, {0.15, 0, 0}, {0, v, 0}}}, sigma), zero_field_state(g),
                     0.0};
}

}  // namespace

TEST(TrajectoryConfig, Validation) {
  const Grid g = fixtures::small_grid();
  EXPECT_DOUBLE_EQ(max_stable_dt(g), 0.5 * g.spacing() / g.c());
  EXPECT_NO_THROW(validate({1e-4, 10, 1}, g));
  EXPECT_THROW(validate({max_stable_dt(g), 10, 1}, g), StabilityViolation);
  EXPECT_THROW(validate({0.0, 10, 1}, g), StabilityViolation);
  EXPECT_THROW(validate({1e-4, -1, 1}, g), InvalidArgument);
  EXPECT_THROW(validate({1e-4, 10, 0}, g), InvalidArgument);
  Evolver ev(orbit_state(g));
  EXPECT_THROW(ev.advance(1.0), StabilityViolation);
}

TEST(Step, FreeParticlesMoveStraight) {
  const Grid g = fixtures::small_grid();
  ParticleSet p({{0, 1, {}, {}}, {0, 2, {0.1, 0, 0}, {0.5, -0.25, 1.0}}}, 3 * g.spacing());
  SystemState s{p, zero_field_state(g), 0.0};
  for (int i = 0; i < 10; ++i) s = step(s, 1e-3);
  EXPECT_NEAR(s.time, 0.01, 1e-15);
  const Vec3 x = s.particles[1].position;
  EXPECT_NEAR(x.x, 0.105, 1e-15);
  EXPECT_NEAR(x.y, -0.0025, 1e-15);
  EXPECT_NEAR(x.z, 0.01, 1e-15);
  EXPECT_EQ(s.particles[1].velocity, (Vec3{0.5, -0.25, 1.0}));
  EXPECT_EQ(s.particles[0].position, Vec3{});
}

TEST(Step, VacuumModeIsRotatedExactly) {
  const Grid g = fixtures::small_grid();
  const std::vector<VacuumMode> mode = {{{2, 1, 0}, {0.01, -0.02, 0.005}, 0.7}};
  ParticleSet none({{0, 1, {}, {}}, {0, 1, {0.1, 0, 0}, {}}}, 3 * g.spacing());
  for (double dt : {4e-4, 2e-4}) {
    Evolver ev(SystemState{none, vacuum_field(g, mode, 0.0), 0.0});
    const int n = static_cast<int>(std::lround(0.02 / dt));
    for (int i = 0; i < n; ++i) ev.advance(dt);
    const auto exact = vacuum_field(g, mode, ev.time());
    const auto s = ev.state();
    EXPECT_LT(relative_l2(s.field.a_perp, exact.a_perp), 1e-12);
    EXPECT_LT(relative_l2(s.field.e_perp, exact.e_perp), 1e-12);
  }
}

TEST(Run, OutputSchedule) {
  const Grid g = fixtures::small_grid();
  const auto s0 = orbit_state(g);
  const auto only = run(s0, {2e-4, 0, 1});
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0].time, 0.0);

  const auto ends = run(s0, {2e-4, 5, 5});
  ASSERT_EQ(ends.size(), 2u);
  EXPECT_NEAR(ends[1].time, 1e-3, 1e-15);

  const auto strided = run(s0, {2e-4, 7, 3});
  ASSERT_EQ(strided.size(), 4u);
  EXPECT_NEAR(strided[2].time, 6 * 2e-4, 1e-15);
  EXPECT_NEAR(strided[3].time, 7 * 2e-4, 1e-15);

  const auto energies = run_energy(s0, {2e-4, 7, 3});
  ASSERT_EQ(energies.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(energies[i].time, strided[i].time, 1e-15);
    const auto direct = energy_sample(strided[i]);
    EXPECT_NEAR(energies[i].total, direct.total, 1e-12 * direct.total);
    EXPECT_NEAR(energies[i].radiation, direct.radiation, 1e-12 * direct.total);
  }

  // step() and Evolver agree
  SystemState s = s0;
  for (int i = 0; i < 7; ++i) s = step(s, 2e-4);
  EXPECT_LT(relative_l2(s.field.e_perp, strided[3].field.e_perp), 1e-12);
}

TEST(Run, FieldsStayTransverseAndNucleusPinned) {
  const Grid g = fixtures::small_grid();
  Evolver ev(orbit_state(g));
  for (int i = 0; i < 40; ++i) {
    ev.advance(2e-4);
    if (i % 10 == 9) {
      const auto s = ev.state();
      EXPECT_TRUE(is_transverse(s.field.a_perp, 1e-10));
      EXPECT_TRUE(is_transverse(s.field.e_perp, 1e-10));
      EXPECT_EQ(s.particles[0].position, Vec3{});
      EXPECT_NEAR(s.field.e_perp.mean().x, 0.0, 1e-14);
    }
  }
}

TEST(Run, OrbitRadiatesAndConservesEnergy) {
  const Grid g = fixtures::small_grid();
  Evolver ev(orbit_state(g));
  const auto e0 = ev.energy();
  EXPECT_EQ(e0.radiation, 0.0);
  double max_drift = 0;
  for (int i = 0; i < 300; ++i) {
    ev.advance(4e-4);
    max_drift = std::max(max_drift, std::abs(ev.energy().total - e0.total) / e0.total);
  }
  EXPECT_GT(ev.energy().radiation, e0.radiation);
  EXPECT_LT(max_drift, 1e-4);
  // still bound: the electron stays near its orbit
  EXPECT_NEAR(norm(ev.particles()[1].position), 0.15, 0.03);
}

TEST(Run, ContinuityAcrossConsecutiveSteps) {
  const Grid g = fixtures::small_grid();
  const auto s0 = orbit_state(g);
  auto residual = [&](double dt) { return continuity_residual(s0.particles, step(s0, dt).particles, g, dt); };
  EXPECT_NEAR(residual(1e-3) / residual(5e-4), 4.0, 0.3);
}
