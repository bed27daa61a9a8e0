#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "gaugelab/grid.hpp"
#include "gaugelab/vec3.hpp"

namespace gaugelab {

struct Particle {
  double charge = 0.0;
  double mass = 1.0;
  Vec3 position;
  Vec3 velocity;
};

/// One neutral atom of smeared point charges.
///
/// With `immobile_nucleus` set, particle 0 is the nucleus: it must sit at the
/// origin with zero velocity, it is never pushed by the dynamics, and the
/// origin is the reference point of the multipolar fields. Without the flag
/// the reference point is the centre of mass.
class ParticleSet {
 public:
  ParticleSet(std::vector<Particle> particles, double sigma, bool immobile_nucleus = true);

  std::size_t size() const { return particles_.size(); }
  const Particle& operator[](std::size_t i) const { return particles_[i]; }
  const std::vector<Particle>& particles() const { return particles_; }
  double sigma() const { return sigma_; }
  bool immobile_nucleus() const { return immobile_nucleus_; }
  /// Atomic number Z: particles are indexed 0..Z.
  int z() const { return static_cast<int>(particles_.size()) - 1; }

  /// True when the particle never moves (the pinned nucleus).
  bool is_pinned(std::size_t i) const { return immobile_nucleus_ && i == 0; }

  Vec3 reference_point() const;
  Vec3 reference_velocity() const;

  /// Copy with replaced kinematics; sizes must match.
  ParticleSet with_kinematics(const std::vector<Vec3>& positions, const std::vector<Vec3>& velocities) const;
  ParticleSet with_sigma(double sigma) const;

 private:
  std::vector<Particle> particles_;
  double sigma_;
  bool immobile_nucleus_;
};

/// Throws SmearingTooNarrow if sigma < 3 dx and OutOfTrustedRegion if any
/// particle lies outside |x| <= L/4.
void require_compatible(const ParticleSet& p, const Grid& g);

/// Text configuration, one directive per line, '#' starts a comment:
///
///   sigma 0.046875
///   immobile_nucleus 1
///   particle <q> <m> <x> <y> <z> <vx> <vy> <vz>
///
/// Particles are listed nucleus first. An optional `Z <int>` line is checked
/// against the particle count.
ParticleSet read_particle_config(std::istream& in);
ParticleSet read_particle_config(const std::filesystem::path& path);
void write_particle_config(std::ostream& out, const ParticleSet& p);

}  // namespace gaugelab
