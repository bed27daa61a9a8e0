#pragma once

#include <cmath>
#include <numbers>

#include "gaugelab/particles.hpp"
#include "gaugelab/random_fields.hpp"

namespace fixtures {

using namespace gaugelab;

inline constexpr double kPi = std::numbers::pi;

// Small lattice for fast unit tests; c = 10.
inline Grid small_grid(int n = 32) { return Grid(n, 1.0, 1.0, 0.01); }

inline ParticleSet dipole(const Grid& g, Vec3 x = {0.1, 0.0, 0.0}, Vec3 v = {}) {
  return ParticleSet({{1.0, 1836.0, {}, {}}, {-1.0, 1.0, x, v}}, 3.0 * g.spacing());
}

inline ParticleSet three_particle(const Grid& g) {
  return ParticleSet({{2.0, 3672.0, {}, {}},
                      {-1.0, 1.0, {0.08, 0.03, -0.02}, {0.2, 0.5, -0.1}},
                      {-1.0, 1.0, {-0.05, 0.09, 0.04}, {-0.4, 0.1, 0.3}}},
                     3.0 * g.spacing());
}

inline ParticleSet z4_atom(const Grid& g, std::uint64_t seed = 11) {
  return random_atom(4, 3.0 * g.spacing(), 0.04, 0.18, 0.8, seed);
}

// Relative difference scaled by the larger magnitude.
inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline double rel(const Vec3& a, const Vec3& b) {
  const double s = std::max(norm(a), norm(b));
  return s == 0.0 ? 0.0 : norm(a - b) / s;
}

}  // namespace fixtures
