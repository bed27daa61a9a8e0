#pragma once

#include <string>

#include "gaugelab/fields.hpp"
#include "gaugelab/particles.hpp"

namespace gaugelab {

enum class GaugeLabel { coulomb, poincare, transformed };

std::string to_string(GaugeLabel label);

/// Lattice potentials with the time derivative of A carried alongside, so the
/// electric field can be rebuilt without a second snapshot.
struct Potentials {
  ScalarField phi;
  VectorField a;
  VectorField a_dot;
  GaugeLabel label = GaugeLabel::coulomb;
};

/// Gauge function and its time derivative, both supplied by the caller.
struct GaugeFunction {
  ScalarField chi;
  ScalarField chi_dot;
};

struct EBFields {
  VectorField e;
  VectorField b;
};

/// Coulomb-gauge potentials: phi = poisson_solve(rho), A = a_perp, dA/dt = -E_perp.
/// Throws NonTransverseInput if ||(a_perp)_par|| > tol * ||a_perp||.
Potentials coulomb_potentials(const VectorField& e, const VectorField& a_perp, const ParticleSet& p,
                              double tol = 1e-10);

/// phi' = phi + dchi/dt, A' = A - grad chi, dA'/dt = dA/dt - grad(dchi/dt).
Potentials apply_gauge_transform(const Potentials& pot, const GaugeFunction& chi);

/// E = -dA/dt - grad phi, B = curl A.
EBFields fields_from_potentials(const Potentials& pot);

}  // namespace gaugelab
