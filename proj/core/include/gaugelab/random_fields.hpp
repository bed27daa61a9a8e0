#pragma once

#include <cstdint>

#include "gaugelab/fields.hpp"
#include "gaugelab/gauges.hpp"
#include "gaugelab/particles.hpp"

namespace gaugelab {

/// Zero-mean scalar field holding only modes with every |m_i| <= m_max,
/// scaled to the given rms. Deterministic in seed.
ScalarField random_scalar_field(const Grid& g, std::uint64_t seed, int m_max, double rms = 1.0);

/// Zero-mean transverse vector field, band-limited like random_scalar_field.
VectorField random_transverse_field(const Grid& g, std::uint64_t seed, int m_max, double rms = 1.0);

/// chi and dchi/dt drawn independently.
GaugeFunction random_gauge_function(const Grid& g, std::uint64_t seed, int m_max, double rms = 1.0);

/// Neutral atom with a pinned nucleus of charge +Z at the origin and Z unit
/// negative charges at random positions with radius in [r_min, r_max] and
/// random velocities of magnitude up to v_max.
ParticleSet random_atom(int z, double sigma, double r_min, double r_max, double v_max, std::uint64_t seed,
                        double electron_mass = 1.0);

}  // namespace gaugelab
