#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "gaugelab/fields.hpp"
#include "gaugelab/gauges.hpp"
#include "gaugelab/particles.hpp"
#include "gaugelab/poincare.hpp"
#include "gaugelab/quadrature.hpp"

namespace gaugelab {

/// Transverse vector potential (the field coordinate) and E_perp = -dA_perp/dt.
struct FieldState {
  VectorField a_perp;
  VectorField e_perp;
};

/// Throws NonTransverseInput unless both fields are transverse to tol.
FieldState make_field_state(VectorField a_perp, VectorField e_perp, double tol = 1e-10);
FieldState zero_field_state(const Grid& g);

/// Particles plus transverse field. E_par is always derived from the particles.
struct SystemState {
  ParticleSet particles;
  FieldState field;
  double time = 0.0;

  const Grid& grid() const { return field.a_perp.grid(); }
};

/// How particle-side line integrals read lattice fields. `smeared` averages
/// the field over the particle's Gaussian (cell_volume * sum delta * F), which
/// is exactly what the lattice integrals of P, M against a field evaluate;
/// `interpolated` uses sample_at.
enum class ParticleSampling { smeared, interpolated };

struct MechanicsOptions {
  SQuadrature quad = gauss_legendre(32);
  ParticleSampling sampling = ParticleSampling::smeared;
};

VectorField electric_field(const SystemState& s);
VectorField magnetic_field(const SystemState& s);

/// Terms of a Lagrangian. The minimal form uses the Coulomb pair sum and so
/// excludes the particles' self-energies; the field-theoretic forms
/// (generic, PZW, Poincare) contain them through the field energy.
/// `self_energy` always holds sum_a q_a^2 lattice_self_energy.
struct LagrangianBreakdown {
  double kinetic = 0.0;
  double electrostatic = 0.0;
  double field = 0.0;
  double interaction = 0.0;
  double self_energy = 0.0;
  double total = 0.0;
  bool includes_self_energy = true;

  /// Value with the self-energies counted, comparable across all forms.
  double field_theoretic() const { return includes_self_energy ? total : total - self_energy; }
};

double kinetic_energy(const ParticleSet& p);
double self_energy(const ParticleSet& p, const Grid& g);

/// T - V_Coulomb + int(eps0 E_perp^2/2 - B^2/2mu0) + int j_perp . A_perp, with
/// V_Coulomb = 0.5 int rho phi_C - self_energy.
LagrangianBreakdown lagrangian_minimal(const SystemState& s, const MechanicsOptions& opts = {});

/// T + int(eps0 E^2/2 - B^2/2mu0) + int(j . A - rho phi). Throws
/// InconsistentPotentials if the potentials' fields differ from the state's by
/// more than tol relative.
LagrangianBreakdown lagrangian_generic(const SystemState& s, const Potentials& pot, const MechanicsOptions& opts = {},
                                       double tol = 1e-8);

/// T + int(eps0 E^2/2 - B^2/2mu0) + int(P . E + M . B).
LagrangianBreakdown lagrangian_pzw(const SystemState& s, const MechanicsOptions& opts = {});

/// Poincare-gauge Lagrangian of the single atom: point charges coupled to the
/// pointwise Poincare potentials of the particle-averaged fields,
/// T + int(eps0 E^2/2 - B^2/2mu0) + sum_a q_a (v_a . A_P(x_a) - phi_P(x_a)).
LagrangianBreakdown lagrangian_poincare(const SystemState& s, double phi0 = 0.0, const MechanicsOptions& opts = {},
                                        const PoincareOptions& popts = {});

/// int P_perp . A_perp.
double pzw_boundary_term(const SystemState& s, const MechanicsOptions& opts = {});

/// m v - q x cross int_0^1 s B(s x) ds for particle alpha >= 1.
Vec3 particle_momentum_pzw(const SystemState& s, std::size_t alpha, const MechanicsOptions& opts = {});
/// Same with an externally supplied B in place of curl A_perp, e.g. a uniform
/// field, which has no periodic vector potential.
Vec3 particle_momentum_pzw(const SystemState& s, const VectorField& b, std::size_t alpha,
                           const MechanicsOptions& opts = {});

enum class FieldMomentumVariant { minimal_transverse, minimal_full, pzw, pzw_transverse };

/// Throws UnknownVariant for names other than the four enumerators.
FieldMomentumVariant parse_field_momentum_variant(const std::string& name);
std::string to_string(FieldMomentumVariant v);

/// minimal_transverse: -eps0 E_perp; minimal_full: -eps0 E; pzw: -(eps0 E + P);
/// pzw_transverse: -eps0 E_perp (the momentum after eliminating P_perp . E_perp).
VectorField field_momentum(const SystemState& s, FieldMomentumVariant variant, const MechanicsOptions& opts = {});
VectorField field_momentum(const SystemState& s, const std::string& variant, const MechanicsOptions& opts = {});

struct HamiltonianForms {
  double legendre = 0.0;
  double energy_form = 0.0;
  double multipolar_form = 0.0;
};

/// The three forms of the PZW Hamiltonian. The canonical field momentum is the
/// transverse -D; requires an immobile nucleus.
HamiltonianForms hamiltonian_pzw(const SystemState& s, const MechanicsOptions& opts = {});

struct MagicOptions {
  MechanicsOptions mechanics;
  PoincareOptions poincare;
  /// Radius of the ball, as a fraction of L, in which curl dA_P/dt is built
  /// from the pointwise A_P.
  double ball_fraction = 0.125;
  /// Finite-difference step as a fraction of the lattice spacing.
  double fd_step = 0.5;
};

struct MagicIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double total = 0.0;
};

/// lhs = int P_perp . E_perp, rhs = int P_par . (dA_P/dt)_par, total = int P . dA_P/dt,
/// at the instant of `mid`, with dA_P/dt the centred difference of the
/// pointwise A_P between prev and next (2 dt apart). P enters through its
/// line-integral form, sum_a q_a x_a . int_0^1 F(s x_a) ds. The transverse
/// part of dA_P/dt is rebuilt from its curl: finite differences of A_P inside
/// the ball, the centred difference of B outside.
MagicIdentity magic_identity_residual(const SystemState& prev, const SystemState& mid, const SystemState& next,
                                      double dt, const MagicOptions& opts = {});

/// A state as a function of time; must be kinematically consistent
/// (v = dx/dt, E_perp = -dA_perp/dt) for the derivative checks below.
using Trajectory = std::function<SystemState(double)>;
/// A time-dependent gauge function.
using GaugeFamily = std::function<GaugeFunction(double)>;

struct DerivativeCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const { return std::abs(lhs - rhs); }
};

/// lhs = L_minimal - self_energy - L_PZW at t (the self-energy constant that the
/// Coulomb pair sum drops); rhs = d/dt int P_perp . A_perp by centred difference of step h.
DerivativeCheck pzw_equivalence(const Trajectory& traj, double t, double h, const MechanicsOptions& opts = {});

/// lhs = L_generic(Coulomb potentials transformed by chi(t)) - L_generic(Coulomb potentials);
/// rhs = -d/dt int rho chi by centred difference of step h (the smeared form of
/// -d/dt sum_a q_a chi(x_a)).
DerivativeCheck gauge_delta_L(const Trajectory& traj, const GaugeFamily& chi, double t, double h,
                              const MechanicsOptions& opts = {});

}  // namespace gaugelab
