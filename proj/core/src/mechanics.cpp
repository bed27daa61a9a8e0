#include "gaugelab/mechanics.hpp"

#include "gaugelab/errors.hpp"
#include "gaugelab/fft.hpp"
#include "gaugelab/interpolation.hpp"
#include "gaugelab/multipolar.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"

namespace gaugelab {

namespace {

// int_0^1 s^power F(X + s xi) ds read from the lattice with the chosen sampling.
Vec3 segment_integral(const VectorField& f, const Vec3& X, const Vec3& xi, int power, double sigma,
                      const MechanicsOptions& opts) {
  const auto& q = opts.quad;
  Vec3 acc;
  if (opts.sampling == ParticleSampling::smeared) {
    const SmearedDelta delta(f.grid(), sigma);
    for (int i = 0; i < q.order(); ++i) {
      const double w = q.weights[i] * (power == 1 ? q.nodes[i] : 1.0);
      acc += w * delta.smeared_sample(f, X + q.nodes[i] * xi);
    }
  } else {
    for (int i = 0; i < q.order(); ++i) {
      const double w = q.weights[i] * (power == 1 ? q.nodes[i] : 1.0);
      acc += w * sample_at(f, X + q.nodes[i] * xi);
    }
  }
  return acc;
}

// Multiplies every mode by exp(-k^2 sigma^2 / 2): the lattice convolution with delta_sigma.
VectorField gaussian_filter(const VectorField& v, double sigma) {
  const Grid& g = v.grid();
  auto spec = forward(v);
  const WaveVectors wv(g);
  const int n = g.n();
  const int nh = n / 2 + 1;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < nh; ++iz) {
        const double f = std::exp(-0.5 * norm2(wv.k(ix, iy, iz)) * sigma * sigma);
        const std::size_t i = spec.comp[0].index(ix, iy, iz);
        for (auto& c : spec.comp) c[i] *= f;
      }
  return inverse(spec);
}

void require_immobile(const ParticleSet& p, const char* what) {
  if (!p.immobile_nucleus()) throw InvalidArgument(std::string(what) + " requires an immobile nucleus");
}

Vec3 momentum_with_field(const SystemState& s, const VectorField& b, std::size_t alpha, const MechanicsOptions& opts) {
  const auto& p = s.particles;
  if (alpha >= p.size()) throw InvalidArgument("particle index out of range");
  if (p.is_pinned(alpha)) throw InvalidArgument("particle_momentum_pzw: the pinned nucleus has no momentum");
  const auto& a = p[alpha];
  if (norm(a.position) > 0.25 * s.grid().length() * (1.0 + 1e-12))
    throw OutOfTrustedRegion("particle_momentum_pzw: particle outside |x| <= L/4");
  const Vec3 X = p.reference_point();
  const Vec3 xi = a.position - X;
  const Vec3 v = segment_integral(b, X, xi, 1, p.sigma(), opts);
  return a.mass * a.velocity - a.charge * cross(xi, v);
}

// sum_a q_a xi_a . int_0^1 F(s xi_a) ds for a pointwise F: the pairing of the
// line-integral polarization with F.
double line_pairing(const ParticleSet& p, const SQuadrature& q, const std::function<Vec3(const Vec3&)>& f) {
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const Vec3 xi = p[a].position;
    if (xi == Vec3{}) continue;
    Vec3 line;
    for (int i = 0; i < q.order(); ++i) line += q.weights[i] * f(q.nodes[i] * xi);
    acc += p[a].charge * dot(xi, line);
  }
  return acc;
}

}  // namespace

FieldState make_field_state(VectorField a_perp, VectorField e_perp, double tol) {
  require_same_grid(a_perp.grid(), e_perp.grid());
  if (!is_transverse(a_perp, tol)) throw NonTransverseInput("field state: A_perp is not transverse");
  if (!is_transverse(e_perp, tol)) throw NonTransverseInput("field state: E_perp is not transverse");
  return FieldState{std::move(a_perp), std::move(e_perp)};
}

FieldState zero_field_state(const Grid& g) { return FieldState{VectorField(g), VectorField(g)}; }

VectorField electric_field(const SystemState& s) {
  return s.field.e_perp + longitudinal_field(s.particles, s.grid());
}

VectorField magnetic_field(const SystemState& s) { return curl(s.field.a_perp); }

double kinetic_energy(const ParticleSet& p) {
  double t = 0.0;
  for (const auto& a : p.particles()) t += 0.5 * a.mass * norm2(a.velocity);
  return t;
}

double self_energy(const ParticleSet& p, const Grid& g) {
  double q2 = 0.0;
  for (const auto& a : p.particles()) q2 += a.charge * a.charge;
  return q2 * lattice_self_energy(g, p.sigma());
}

LagrangianBreakdown lagrangian_minimal(const SystemState& s, const MechanicsOptions&) {
  const Grid& g = s.grid();
  const auto rho = charge_density(s.particles, g);
  const auto phi = poisson_solve(rho, g.eps0());
  const auto b = magnetic_field(s);
  LagrangianBreakdown out;
  out.includes_self_energy = false;
  out.kinetic = kinetic_energy(s.particles);
  out.self_energy = self_energy(s.particles, g);
  out.electrostatic = -(0.5 * inner_product(rho, phi) - out.self_energy);
  out.field = 0.5 * g.eps0() * inner_product(s.field.e_perp, s.field.e_perp) - 0.5 / g.mu0() * inner_product(b, b);
  out.interaction = inner_product(transverse_part(current_density(s.particles, g)), s.field.a_perp);
  out.total = out.kinetic + out.electrostatic + out.field + out.interaction;
  return out;
}

LagrangianBreakdown lagrangian_generic(const SystemState& s, const Potentials& pot, const MechanicsOptions&,
                                       double tol) {
  const Grid& g = s.grid();
  require_same_grid(g, pot.phi.grid());
  const auto e = electric_field(s);
  const auto b = magnetic_field(s);
  const auto from_pot = fields_from_potentials(pot);
  if (relative_l2(from_pot.e, e) > tol || relative_l2(from_pot.b, b) > tol)
    throw InconsistentPotentials("lagrangian_generic: potentials do not reproduce the state's fields");
  LagrangianBreakdown out;
  out.kinetic = kinetic_energy(s.particles);
  out.self_energy = self_energy(s.particles, g);
  out.field = 0.5 * g.eps0() * inner_product(e, e) - 0.5 / g.mu0() * inner_product(b, b);
  out.interaction = inner_product(current_density(s.particles, g), pot.a) -
                    inner_product(charge_density(s.particles, g), pot.phi);
  out.total = out.kinetic + out.field + out.interaction;
  return out;
}

LagrangianBreakdown lagrangian_pzw(const SystemState& s, const MechanicsOptions& opts) {
  const Grid& g = s.grid();
  const auto e_par = longitudinal_field(s.particles, g);
  const auto e = s.field.e_perp + e_par;
  const auto b = magnetic_field(s);
  const auto pol = polarization_field(s.particles, g, opts.quad);
  const auto mag = magnetization_field(s.particles, g, opts.quad);
  const double eps0 = g.eps0();
  LagrangianBreakdown out;
  out.kinetic = kinetic_energy(s.particles);
  out.self_energy = self_energy(s.particles, g);
  const double e_par2 = inner_product(e_par, e_par);
  out.electrostatic = 0.5 * eps0 * e_par2 + inner_product(pol, e_par);
  out.field = 0.5 * eps0 * (inner_product(e, e) - e_par2) - 0.5 / g.mu0() * inner_product(b, b);
  out.interaction = inner_product(pol, s.field.e_perp) + inner_product(mag, b);
  out.total = out.kinetic + out.electrostatic + out.field + out.interaction;
  return out;
}

LagrangianBreakdown lagrangian_poincare(const SystemState& s, double phi0, const MechanicsOptions&,
                                        const PoincareOptions& popts) {
  const Grid& g = s.grid();
  require_immobile(s.particles, "lagrangian_poincare");
  const auto e = electric_field(s);
  const auto b = magnetic_field(s);
  const auto e_avg = gaussian_filter(e, s.particles.sigma());
  const auto b_avg = gaussian_filter(b, s.particles.sigma());
  LagrangianBreakdown out;
  out.kinetic = kinetic_energy(s.particles);
  out.self_energy = self_energy(s.particles, g);
  out.field = 0.5 * g.eps0() * inner_product(e, e) - 0.5 / g.mu0() * inner_product(b, b);
  for (const auto& a : s.particles.particles()) {
    const auto pot = poincare_potentials(e_avg, b_avg, a.position, phi0, popts);
    out.interaction += a.charge * (dot(a.velocity, pot.a) - pot.phi);
  }
  out.total = out.kinetic + out.field + out.interaction;
  return out;
}

double pzw_boundary_term(const SystemState& s, const MechanicsOptions& opts) {
  const auto pol = polarization_field(s.particles, s.grid(), opts.quad);
  return inner_product(transverse_part(pol), s.field.a_perp);
}

Vec3 particle_momentum_pzw(const SystemState& s, std::size_t alpha, const MechanicsOptions& opts) {
  return momentum_with_field(s, magnetic_field(s), alpha, opts);
}

Vec3 particle_momentum_pzw(const SystemState& s, const VectorField& b, std::size_t alpha,
                           const MechanicsOptions& opts) {
  require_same_grid(b.grid(), s.grid());
  return momentum_with_field(s, b, alpha, opts);
}

FieldMomentumVariant parse_field_momentum_variant(const std::string& name) {
  if (name == "minimal_transverse") return FieldMomentumVariant::minimal_transverse;
  if (name == "minimal_full") return FieldMomentumVariant::minimal_full;
  if (name == "pzw") return FieldMomentumVariant::pzw;
  if (name == "pzw_transverse") return FieldMomentumVariant::pzw_transverse;
  throw UnknownVariant("unknown field momentum variant '" + name + "'");
}

std::string to_string(FieldMomentumVariant v) {
  switch (v) {
    case FieldMomentumVariant::minimal_transverse:
      return "minimal_transverse";
    case FieldMomentumVariant::minimal_full:
      return "minimal_full";
    case FieldMomentumVariant::pzw:
      return "pzw";
    case FieldMomentumVariant::pzw_transverse:
      return "pzw_transverse";
  }
  return "unknown";
}

VectorField field_momentum(const SystemState& s, FieldMomentumVariant variant, const MechanicsOptions& opts) {
  const double eps0 = s.grid().eps0();
  switch (variant) {
    case FieldMomentumVariant::minimal_transverse:
    case FieldMomentumVariant::pzw_transverse:
      return -eps0 * s.field.e_perp;
    case FieldMomentumVariant::minimal_full:
      return -eps0 * electric_field(s);
    case FieldMomentumVariant::pzw:
      return -(eps0 * electric_field(s) + polarization_field(s.particles, s.grid(), opts.quad));
  }
  throw UnknownVariant("unknown field momentum variant");
}

VectorField field_momentum(const SystemState& s, const std::string& variant, const MechanicsOptions& opts) {
  return field_momentum(s, parse_field_momentum_variant(variant), opts);
}

HamiltonianForms hamiltonian_pzw(const SystemState& s, const MechanicsOptions& opts) {
  const Grid& g = s.grid();
  const auto& p = s.particles;
  require_immobile(p, "hamiltonian_pzw");
  const double eps0 = g.eps0();
  const double mu0 = g.mu0();
  const auto e = electric_field(s);
  const auto b = magnetic_field(s);
  const auto pol = polarization_field(p, g, opts.quad);
  const auto lag = lagrangian_pzw(s, opts);

  double pv = 0.0;
  double kinetic_from_p = 0.0;
  for (std::size_t a = 1; a < p.size(); ++a) {
    const Vec3 mom = momentum_with_field(s, b, a, opts);
    pv += dot(mom, p[a].velocity);
    const Vec3 v = segment_integral(b, Vec3{}, p[a].position, 1, p.sigma(), opts);
    const Vec3 mech = mom + p[a].charge * cross(p[a].position, v);
    kinetic_from_p += norm2(mech) / (2.0 * p[a].mass);
  }
  const auto pi = -transverse_part(eps0 * e + pol);
  const auto a_dot = -s.field.e_perp;

  HamiltonianForms h;
  h.legendre = pv + inner_product(pi, a_dot) - lag.total;
  h.energy_form = kinetic_energy(p) + 0.5 * eps0 * inner_product(e, e) + 0.5 / mu0 * inner_product(b, b);
  const auto d = -pi;
  h.multipolar_form = kinetic_from_p + 0.5 / eps0 * inner_product(d, d) + 0.5 / mu0 * inner_product(b, b) -
                      inner_product(d, pol) / eps0 + 0.5 / eps0 * inner_product(pol, pol);
  return h;
}

MagicIdentity magic_identity_residual(const SystemState& prev, const SystemState& mid, const SystemState& next,
                                      double dt, const MagicOptions& opts) {
  const Grid& g = mid.grid();
  require_same_grid(g, prev.grid());
  require_same_grid(g, next.grid());
  const auto& p = mid.particles;
  require_immobile(p, "magic_identity_residual");
  const auto& popts = opts.poincare;
  for (const auto& a : p.particles())
    if (norm(a.position) > popts.trusted_fraction * g.length() * (1.0 + 1e-12))
      throw OutOfTrustedRegion("magic_identity_residual: particle outside the trusted region");

  const auto b_prev = magnetic_field(prev);
  const auto b_next = magnetic_field(next);
  const auto a_p_dot = [&](const Vec3& x) {
    return (poincare_vector_potential(b_next, x, popts) - poincare_vector_potential(b_prev, x, popts)) / (2.0 * dt);
  };
  const auto& quad = opts.mechanics.quad;

  MagicIdentity out;
  out.lhs = line_pairing(p, quad, [&](const Vec3& x) { return sample_at(mid.field.e_perp, x, popts.interp); });
  out.total = line_pairing(p, quad, a_p_dot);

  // curl of dA_P/dt: from A_P itself inside the ball, dB/dt outside.
  auto c = (b_next - b_prev) * (1.0 / (2.0 * dt));
  const double h = opts.fd_step * g.spacing();
  const double radius = opts.ball_fraction * g.length();
  const int n = g.n();
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const Vec3 x = g.position(ix, iy, iz);
        if (norm(x) > radius) continue;
        std::array<Vec3, 3> d;
        for (int ax = 0; ax < 3; ++ax) {
          Vec3 e;
          e[ax] = h;
          d[ax] = (8.0 * (a_p_dot(x + e) - a_p_dot(x - e)) - (a_p_dot(x + 2.0 * e) - a_p_dot(x - 2.0 * e))) /
                  (12.0 * h);
        }
        c.set(g.index(ix, iy, iz), Vec3{d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x});
      }
  // Transverse part from its curl: V_perp = -laplacian^-1 curl C.
  const auto curl_c = curl(c);
  VectorField v_perp(g);
  for (int ax = 0; ax < 3; ++ax)
    v_perp.component(ax) = poisson_solve(curl_c.component_field(ax), 1.0, 1e-8).values();
  out.rhs = out.total - line_pairing(p, quad, [&](const Vec3& x) { return sample_at(v_perp, x, popts.interp); });
  return out;
}

DerivativeCheck pzw_equivalence(const Trajectory& traj, double t, double h, const MechanicsOptions& opts) {
  const auto s = traj(t);
  DerivativeCheck out;
  out.lhs = lagrangian_minimal(s, opts).field_theoretic() - lagrangian_pzw(s, opts).total;
  out.rhs = (pzw_boundary_term(traj(t + h), opts) - pzw_boundary_term(traj(t - h), opts)) / (2.0 * h);
  return out;
}

DerivativeCheck gauge_delta_L(const Trajectory& traj, const GaugeFamily& chi, double t, double h,
                              const MechanicsOptions& opts) {
  const auto s = traj(t);
  const Grid& g = s.grid();
  const auto pot = coulomb_potentials(electric_field(s), s.field.a_perp, s.particles);
  DerivativeCheck out;
  out.lhs = lagrangian_generic(s, apply_gauge_transform(pot, chi(t)), opts).total -
            lagrangian_generic(s, pot, opts).total;
  const auto charge_chi = [&](double tau) { return inner_product(charge_density(traj(tau).particles, g), chi(tau).chi); };
  out.rhs = -(charge_chi(t + h) - charge_chi(t - h)) / (2.0 * h);
  return out;
}

}  // namespace gaugelab
