#include "gaugelab/multipolar.hpp"

#include "gaugelab/errors.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"

namespace gaugelab {

namespace {

enum class Kind { polarization, magnetization, polarization_rate };

VectorField build(Kind kind, const ParticleSet& p, const Grid& g, const SQuadrature& q) {
  require_compatible(p, g);
  const SmearedDelta delta(g, p.sigma());
  const Vec3 X = p.reference_point();
  const Vec3 Xdot = p.reference_velocity();
  VectorField out(g);
  for (const auto& a : p.particles()) {
    const Vec3 xi = a.position - X;
    const Vec3 xidot = a.velocity - Xdot;
    if (xi == Vec3{} && xidot == Vec3{}) continue;
    for (int i = 0; i < q.order(); ++i) {
      const double s = q.nodes[i];
      const double w = a.charge * q.weights[i];
      const Vec3 centre = X + s * xi;
      const Vec3 u = Xdot + s * xidot;
      switch (kind) {
        case Kind::polarization:
          delta.deposit(out, centre, w * xi);
          break;
        case Kind::magnetization:
          delta.deposit(out, centre, w * cross(xi, u));
          break;
        case Kind::polarization_rate:
          delta.deposit(out, centre, w * xidot);
          delta.deposit_directional(out, centre, -w * xi, u);
          break;
      }
    }
  }
  return out;
}

VectorField build_checked(Kind kind, const ParticleSet& p, const Grid& g, const SQuadrature& q,
                          std::optional<double> tol_quad) {
  auto f = build(kind, p, g, q);
  if (tol_quad) {
    const auto fine = build(kind, p, g, gauss_legendre(2 * q.order()));
    const double change = relative_l2(f, fine);
    if (change > *tol_quad)
      throw QuadratureTooCoarse("s-quadrature of order " + std::to_string(q.order()) + " changes by " +
                                std::to_string(change) + " when doubled");
  }
  return f;
}

double ratio(double num, double den) { return den == 0.0 ? num : num / den; }

}  // namespace

VectorField polarization_field(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                               std::optional<double> tol_quad) {
  return build_checked(Kind::polarization, p, g, q, tol_quad);
}

VectorField magnetization_field(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                std::optional<double> tol_quad) {
  return build_checked(Kind::magnetization, p, g, q, tol_quad);
}

VectorField polarization_time_derivative(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                         std::optional<double> tol_quad) {
  return build_checked(Kind::polarization_rate, p, g, q, tol_quad);
}

ResidualReport verify_charge_identity(const ParticleSet& p, const Grid& g, const SQuadrature& q, double tol) {
  const auto rho = charge_density(p, g);
  const auto divp = divergence(polarization_field(p, g, q));
  ResidualReport r{"charge_identity", l2_norm(rho), l2_norm(divp), 0.0, tol};
  r.residual = ratio(l2_norm(rho + divp), r.lhs);
  return r;
}

ResidualReport verify_current_identity(const ParticleSet& p, const Grid& g, const SQuadrature& q, double tol) {
  const auto j = current_density(p, g);
  const auto rhs = polarization_time_derivative(p, g, q) + curl(magnetization_field(p, g, q));
  ResidualReport r{"current_identity", l2_norm(j), l2_norm(rhs), 0.0, tol};
  r.residual = ratio(l2_norm(j - rhs), r.lhs);
  return r;
}

ResidualReport verify_longitudinal_consistency(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                               double tol) {
  const auto e_par = g.eps0() * longitudinal_field(p, g);
  const auto p_par = longitudinal_part(polarization_field(p, g, q));
  ResidualReport r{"longitudinal_consistency", l2_norm(e_par), l2_norm(p_par), 0.0, tol};
  r.residual = ratio(l2_norm(e_par + p_par), r.rhs);
  return r;
}

ResidualReport verify_displacement_transverse(const ParticleSet& p, const Grid& g, const SQuadrature& q,
                                              const VectorField& e_perp, double tol) {
  require_same_grid(g, e_perp.grid());
  const auto d = g.eps0() * (longitudinal_field(p, g) + e_perp) + polarization_field(p, g, q);
  const auto d_par = longitudinal_part(d);
  ResidualReport r{"displacement_transverse", l2_norm(d_par), l2_norm(d), 0.0, tol};
  r.residual = ratio(r.lhs, r.rhs);
  return r;
}

}  // namespace gaugelab
