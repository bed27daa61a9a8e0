#pragma once

#include <vector>

#include "gaugelab/dynamics.hpp"
#include "gaugelab/mechanics.hpp"

namespace gaugelab {

/// Free transverse plane wave A = amplitude cos(k . x - c|k| t + phase) with
/// k = 2 pi mode / L; amplitude must be orthogonal to mode.
struct VacuumMode {
  Vec3 mode;
  Vec3 amplitude;
  double phase = 0.0;
};

/// Lattice (A_perp, E_perp = -dA_perp/dt) of a sum of vacuum modes at time t.
FieldState vacuum_field(const Grid& g, const std::vector<VacuumMode>& modes, double t);

/// Prescribed, kinematically consistent trajectory: a pinned nucleus of charge
/// +1 at the origin, one electron (charge -1, mass 1) on the circle of the
/// given radius in the xy-plane with angular frequency omega, and the given
/// vacuum modes.
Trajectory circular_orbit_trajectory(const Grid& g, double sigma, double radius, double omega,
                                     std::vector<VacuumMode> modes = {});

/// Speed of a circular orbit of radius r for an electron (charge -1, mass 1)
/// around a pinned unit nucleus, from the smeared lattice Coulomb force.
double circular_orbit_speed(const Grid& g, double sigma, double radius);

/// Straight-line motion at the initial velocities with a constant E_perp and
/// A_perp(t) = A_perp(t0) - (t - t0) E_perp: kinematically consistent, not a
/// solution of the equations of motion.
Trajectory ballistic_trajectory(const SystemState& s0);

/// Dynamics trajectory recorded at every step of size `step` over
/// [t_centre - half_width, t_centre + half_width]; lookups must hit a
/// recorded step.
class RecordedTrajectory {
 public:
  RecordedTrajectory(const SystemState& s0, double step, int centre_steps, int half_width_steps);
  SystemState operator()(double t) const;
  double centre() const { return t0_ + centre_ * step_; }
  double step() const { return step_; }
  const SystemState& at_step(int k) const;

 private:
  double t0_;
  double step_;
  int centre_;
  int first_;
  std::vector<SystemState> states_;
};

}  // namespace gaugelab
