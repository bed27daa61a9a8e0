#pragma once

#include <memory>
#include <vector>

#include "gaugelab/mechanics.hpp"

namespace gaugelab {

enum class Integrator { leapfrog };

struct TrajectoryConfig {
  double dt = 0.0;
  int n_steps = 0;
  int output_stride = 1;
  Integrator integrator = Integrator::leapfrog;
};

/// 0.5 dx / c.
double max_stable_dt(const Grid& g);

/// Throws StabilityViolation if dt is not in (0, 0.5 dx / c), InvalidArgument
/// for negative counts or a non-positive stride.
void validate(const TrajectoryConfig& cfg, const Grid& g);

struct EnergySample {
  double time = 0.0;
  double kinetic = 0.0;
  /// int(eps0 E^2/2 + B^2/2mu0), E_par included.
  double field = 0.0;
  /// int(eps0 E_perp^2/2 + B^2/2mu0).
  double radiation = 0.0;
  double total = 0.0;
};

EnergySample energy_sample(const SystemState& s);

/// Strang-split time stepper.
///
/// Field half step: every mode of (A_perp, E_perp) is rotated exactly at
/// omega = c |k'| about the static solution mu0 j_perp / k'^2 of the frozen
/// current. Particle step: E kick, magnetic rotation, drift, magnetic rotation,
/// E kick, each a half or full step, with fields averaged over the particle's
/// Gaussian. A pinned nucleus is not moved. The uniform mode and the modes
/// whose derivative wave vector vanishes are not driven by the current, so
/// E_perp and A_perp stay zero-mean. Fields are held as spectra between steps.
class Evolver {
 public:
  explicit Evolver(const SystemState& s0);
  ~Evolver();
  Evolver(Evolver&&) noexcept;
  Evolver& operator=(Evolver&&) noexcept;

  /// One step; throws StabilityViolation if dt is outside (0, 0.5 dx / c).
  void advance(double dt);
  double time() const;
  const ParticleSet& particles() const;
  /// Lattice snapshot of the current state.
  SystemState state() const;
  /// Energies from the spectra (Parseval), without building lattice fields.
  EnergySample energy() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One step of the integrator.
SystemState step(const SystemState& s, double dt);

/// Snapshots at every output_stride-th step, starting with s0 and always
/// ending with the final state.
std::vector<SystemState> run(const SystemState& s0, const TrajectoryConfig& cfg);

/// Energies at the same instants run() would emit.
std::vector<EnergySample> run_energy(const SystemState& s0, const TrajectoryConfig& cfg);

}  // namespace gaugelab
