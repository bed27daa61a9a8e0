#pragma once

#include <optional>

#include "gaugelab/fields.hpp"
#include "gaugelab/particles.hpp"
#include "gaugelab/quadrature.hpp"
#include "gaugelab/report.hpp"

namespace gaugelab {

/// Line-integral polarization about the reference point X of the set
/// (origin for an immobile nucleus, centre of mass otherwise), xi_a = x_a - X:
///   P(x) = sum_a q_a xi_a sum_i w_i delta(x - X - s_i xi_a).
/// With tol_quad set, the result is recomputed at twice the order and
/// QuadratureTooCoarse is thrown if the relative change exceeds it.
VectorField polarization_field(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                               std::optional<double> tol_quad = std::nullopt);

/// M(x) = sum_a q_a sum_i w_i xi_a x (dX/dt + s_i dxi_a/dt) delta(x - X - s_i xi_a).
/// For a pinned nucleus this is sum_a q_a (x_a x v_a) sum_i w_i s_i delta(x - s_i x_a).
VectorField magnetization_field(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                std::optional<double> tol_quad = std::nullopt);

/// Analytic time derivative of polarization_field by the chain rule, using the
/// closed-form Gaussian gradient.
VectorField polarization_time_derivative(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                         std::optional<double> tol_quad = std::nullopt);

/// ||rho + div P|| / ||rho||.
ResidualReport verify_charge_identity(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                      double tol = 1e-6);

/// ||j - dP/dt - curl M|| / ||j||.
ResidualReport verify_current_identity(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                       double tol = 1e-6);

/// ||eps0 E_par + P_par|| / ||P_par||.
ResidualReport verify_longitudinal_consistency(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                               double tol = 1e-6);

/// ||(eps0 E + P)_par|| / ||eps0 E + P|| with E = E_par(particles) + e_perp.
ResidualReport verify_displacement_transverse(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                              const VectorField& e_perp, double tol = 1e-6);

}  // namespace gaugelab
