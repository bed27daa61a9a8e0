#pragma once

#include <array>
#include <vector>

#include "gaugelab/fields.hpp"
#include "gaugelab/particles.hpp"

namespace gaugelab {

/// Periodic Gaussian of width sigma standing in for a Dirac delta on a grid.
///
/// Evaluated separably, each axis as a sum over the nearest periodic images,
/// with the analytic normalization (2 pi sigma^2)^(-3/2). For sigma >= 3 dx the
/// lattice sum times the cell volume differs from 1 by far less than 1e-12.
class SmearedDelta {
 public:
  /// Throws SmearingTooNarrow if sigma < 3 dx.
  SmearedDelta(const Grid& grid, double sigma);

  const Grid& grid() const { return grid_; }
  double width() const { return sigma_; }
  /// Value at the centre, (2 pi sigma^2)^(-3/2).
  double peak() const;

  /// Pointwise value at displacement r (minimum image plus neighbours).
  double operator()(const Vec3& r) const;

  /// field += weight * delta(x - centre)
  void deposit(ScalarField& field, const Vec3& centre, double weight) const;
  /// field += weight * delta(x - centre)
  void deposit(VectorField& field, const Vec3& centre, const Vec3& weight) const;
  /// field += weight * (direction . grad) delta(x - centre)
  void deposit_directional(VectorField& field, const Vec3& centre, const Vec3& weight, const Vec3& direction) const;

  /// Smeared sample cell_volume * sum_y delta(y - x) f(y).
  double smeared_sample(const ScalarField& f, const Vec3& x) const;
  Vec3 smeared_sample(const VectorField& f, const Vec3& x) const;

 private:
  struct Axis {
    std::vector<int> sites;
    std::vector<double> value;
    std::vector<double> slope;
  };
  struct Stencil {
    std::array<Axis, 3> axis;
  };
  Stencil stencil(const Vec3& centre, bool with_slope) const;
  double axis_value(double d, double* slope) const;

  Grid grid_;
  double sigma_;
};

/// rho(x) = sum_a q_a delta_sigma(x - x_a).
ScalarField charge_density(const ParticleSet& p, const Grid& g);

/// j(x) = sum_a q_a v_a delta_sigma(x - x_a).
VectorField current_density(const ParticleSet& p, const Grid& g);

/// E_par = -grad(poisson_solve(rho, eps0)).
VectorField longitudinal_field(const ParticleSet& p, const Grid& g);

/// ||(rho_after - rho_before)/dt + div j_mid|| / ||(rho_after - rho_before)/dt||,
/// where j_mid is deposited at the averaged positions with averaged velocities.
double continuity_residual(const ParticleSet& before, const ParticleSet& after, const Grid& g, double dt);

/// Electrostatic energy of one unit charge smeared on the lattice, interacting
/// with its own periodic, neutralized distribution: 0.5 * <rho, phi> for
/// rho = delta_sigma - 1/L^3. Translation invariant on the lattice.
double lattice_self_energy(const Grid& g, double sigma);

/// Free-space self-energy of a Gaussian charge, q^2 / (8 pi^(3/2) eps0 sigma) per unit q^2.
double free_space_self_energy(double sigma, double eps0);

/// Pair sum sum_{a<b} q_a q_b erf(r_ab / 2 sigma) / (4 pi eps0 r_ab) of free-space
/// Gaussian charges (minimum-image separations).
double free_space_pair_energy(const ParticleSet& p, const Grid& g);

}  // namespace gaugelab
