#pragma once

#include "gaugelab/fields.hpp"
#include "gaugelab/vec3.hpp"

namespace gaugelab {

enum class Interpolation {
  /// 2x2x2 stencil, error O(dx^2).
  trilinear,
  /// 8x8x8 Lagrange stencil, error O(dx^8); used where sampled fields are
  /// differentiated by finite differences.
  lagrange8,
};

/// Periodic interpolation of a lattice field at an arbitrary position.
Vec3 sample_at(const VectorField& v, const Vec3& x, Interpolation order = Interpolation::trilinear);
double sample_at(const ScalarField& f, const Vec3& x, Interpolation order = Interpolation::trilinear);

}  // namespace gaugelab
