#include "gaugelab/trajectories.hpp"

#include <cmath>
#include <numbers>

#include "gaugelab/errors.hpp"
#include "gaugelab/sources.hpp"

namespace gaugelab {

FieldState vacuum_field(const Grid& g, const std::vector<VacuumMode>& modes, double t) {
  VectorField a(g);
  VectorField e(g);
  const double dk = 2.0 * std::numbers::pi / g.length();
  for (const auto& m : modes) {
    const Vec3 k = dk * m.mode;
    if (std::abs(dot(k, m.amplitude)) > 1e-12 * norm(k) * norm(m.amplitude))
      throw NonTransverseInput("vacuum mode amplitude is not orthogonal to its wave vector");
    const double w = g.c() * norm(k);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double th = dot(k, g.position(i)) - w * t + m.phase;
      a.add(i, std::cos(th) * m.amplitude);
      e.add(i, -w * std::sin(th) * m.amplitude);
    }
  }
  return FieldState{std::move(a), std::move(e)};
}

Trajectory circular_orbit_trajectory(const Grid& g, double sigma, double radius, double omega,
                                     std::vector<VacuumMode> modes) {
  return [g, sigma, radius, omega, modes = std::move(modes)](double t) {
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    Particle nucleus{1.0, 1836.0, {}, {}};
    Particle electron{-1.0, 1.0, {radius * c, radius * s, 0.0}, {-radius * omega * s, radius * omega * c, 0.0}};
    return SystemState{ParticleSet({nucleus, electron}, sigma, true), vacuum_field(g, modes, t), t};
  };
}

double circular_orbit_speed(const Grid& g, double sigma, double radius) {
  const ParticleSet p({{1.0, 1836.0, {}, {}}, {-1.0, 1.0, {radius, 0.0, 0.0}, {}}}, sigma, true);
  const SmearedDelta delta(g, sigma);
  const Vec3 force = -1.0 * delta.smeared_sample(longitudinal_field(p, g), {radius, 0.0, 0.0});
  return std::sqrt(std::max(0.0, -force.x * radius));
}

Trajectory ballistic_trajectory(const SystemState& s0) {
  return [s0](double t) {
    const double tau = t - s0.time;
    std::vector<Vec3> x, v;
    for (std::size_t a = 0; a < s0.particles.size(); ++a) {
      const auto& pa = s0.particles[a];
      x.push_back(pa.position + tau * pa.velocity);
      v.push_back(pa.velocity);
    }
    return SystemState{s0.particles.with_kinematics(x, v),
                       FieldState{s0.field.a_perp - tau * s0.field.e_perp, s0.field.e_perp}, t};
  };
}

RecordedTrajectory::RecordedTrajectory(const SystemState& s0, double step, int centre_steps, int half_width_steps)
    : t0_(s0.time), step_(step), centre_(centre_steps), first_(centre_steps - half_width_steps) {
  if (first_ < 0) throw InvalidArgument("recorded window starts before the initial state");
  Evolver ev(s0);
  const int last = centre_steps + half_width_steps;
  for (int k = 0; k <= last; ++k) {
    if (k >= first_) states_.push_back(k == 0 ? s0 : ev.state());
    if (k < last) ev.advance(step);
  }
}

const SystemState& RecordedTrajectory::at_step(int k) const {
  const int i = k - first_;
  if (i < 0 || i >= static_cast<int>(states_.size())) throw InvalidArgument("step outside the recorded window");
  return states_[i];
}

SystemState RecordedTrajectory::operator()(double t) const {
  const double u = (t - t0_) / step_;
  const long k = std::lround(u);
  if (std::abs(u - k) > 1e-6) throw InvalidArgument("time is not on a recorded step");
  return at_step(static_cast<int>(k));
}

}  // namespace gaugelab
