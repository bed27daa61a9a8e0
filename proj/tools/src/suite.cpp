#include "gaugelab_cli/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "gaugelab/errors.hpp"
#include "gaugelab/gauges.hpp"
#include "gaugelab/multipolar.hpp"
#include "gaugelab/poincare.hpp"
#include "gaugelab/random_fields.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"
#include "gaugelab/trajectories.hpp"

namespace gaugelab::cli {

namespace {

struct Outcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Outcome from_report(const ResidualReport& r) { return {r.lhs, r.rhs, r.residual}; }

class Context {
 public:
  explicit Context(const Scenario& sc)
      : sc_(sc), state_(initial_state(sc)), quad_(gauss_legendre(sc.quadrature_order)) {
    mech_.quad = quad_;
    popts_.quad = quad_;
  }

  const Grid& grid() const { return state_.grid(); }
  const SystemState& state() const { return state_; }
  const ParticleSet& particles() const { return state_.particles; }
  const SQuadrature& quad() const { return quad_; }
  const MechanicsOptions& mech() const { return mech_; }
  const PoincareOptions& popts() const { return popts_; }
  double tol(const std::string& name) const { return sc_.tolerances.at(name); }
  double h() const { return sc_.fd_step; }
  std::uint64_t seed() const { return sc_.seed; }

  const GaugeFunction& chi() {
    if (!chi_) chi_ = random_gauge_function(grid(), seed() + 2, sc_.radiation.m_max);
    return *chi_;
  }
  const Potentials& coulomb() {
    if (!coulomb_) coulomb_ = coulomb_potentials(electric_field(state_), state_.field.a_perp, particles());
    return *coulomb_;
  }
  const Potentials& transformed() {
    if (!transformed_) transformed_ = apply_gauge_transform(coulomb(), chi());
    return *transformed_;
  }
  const MagicIdentity& magic() {
    if (!magic_) {
      const Trajectory traj = ballistic_trajectory(state_);
      const double t = state_.time;
      MagicOptions mo;
      mo.mechanics = mech_;
      mo.poincare = popts_;
      magic_ = magic_identity_residual(traj(t - h()), state_, traj(t + h()), h(), mo);
    }
    return *magic_;
  }

 private:
  const Scenario& sc_;
  SystemState state_;
  SQuadrature quad_;
  MechanicsOptions mech_;
  PoincareOptions popts_;
  std::optional<GaugeFunction> chi_;
  std::optional<Potentials> coulomb_;
  std::optional<Potentials> transformed_;
  std::optional<MagicIdentity> magic_;
};

struct CheckDef {
  CheckInfo info;
  std::function<Outcome(Context&)> run;
};

Outcome gauge_fields(Context& c) {
  const auto before = fields_from_potentials(c.coulomb());
  const auto after = fields_from_potentials(c.transformed());
  return {l2_norm(after.e) + l2_norm(after.b), l2_norm(before.e) + l2_norm(before.b),
          std::max(relative_l2(after.e, before.e), relative_l2(after.b, before.b))};
}

Outcome gauge_a_perp(Context& c) {
  const auto a_perp = transverse_part(c.transformed().a);
  const auto& ref = c.state().field.a_perp;
  return {l2_norm(a_perp), l2_norm(ref), relative_l2(a_perp, ref)};
}

Outcome gauge_lagrangian(Context& c) {
  const auto& pot = c.transformed();
  const SystemState moved{c.particles(),
                          FieldState{transverse_part(pot.a), -1.0 * transverse_part(pot.a_dot)}, c.state().time};
  const double after = lagrangian_minimal(moved, c.mech()).total;
  const double before = lagrangian_minimal(c.state(), c.mech()).total;
  return {after, before, rel_diff(after, before)};
}

Outcome gauge_change_law(Context& c) {
  const double t0 = c.state().time;
  const GaugeFunction chi = c.chi();
  const GaugeFamily family = [chi, t0](double t) {
    return GaugeFunction{chi.chi + (t - t0) * chi.chi_dot, chi.chi_dot};
  };
  const auto d = gauge_delta_L(ballistic_trajectory(c.state()), family, t0, c.h(), c.mech());
  return {d.lhs, d.rhs, rel_diff(d.lhs, d.rhs)};
}

Outcome pzw(Context& c) {
  const auto d = pzw_equivalence(ballistic_trajectory(c.state()), c.state().time, c.h(), c.mech());
  return {d.lhs, d.rhs, rel_diff(d.lhs, d.rhs)};
}

Outcome supplement(Context& c) {
  const auto e_par = longitudinal_field(c.particles(), c.grid());
  const auto& e_perp = c.state().field.e_perp;
  const double overlap = inner_product(e_par, e_perp);
  const double scale = l2_norm(e_par) * l2_norm(e_perp);
  return {overlap, 0.0, scale == 0.0 ? std::abs(overlap) : std::abs(overlap) / scale};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = {
      {{"charge_identity", "chargesFromPolarization", 1e-6},
       [](Context& c) { return from_report(verify_charge_identity(c.particles(), c.grid(), c.quad(), 1.0)); }},
      {{"current_identity", "currentDensityFromMagnetization", 1e-6},
       [](Context& c) { return from_report(verify_current_identity(c.particles(), c.grid(), c.quad(), 1.0)); }},
      {{"longitudinal_consistency", "electrostatic1", 1e-6},
       [](Context& c) {
         return from_report(verify_longitudinal_consistency(c.particles(), c.grid(), c.quad(), 1.0));
       }},
      {{"displacement_transverse", "pzwHamiltonian", 1e-6},
       [](Context& c) {
         return from_report(
             verify_displacement_transverse(c.particles(), c.grid(), c.quad(), c.state().field.e_perp, 1.0));
       }},
      {{"gauge_invariance_fields", "gaugeTrafo", 1e-10}, gauge_fields},
      {{"gauge_invariance_a_perp", "gaugeTrafoA", 1e-10}, gauge_a_perp},
      {{"gauge_invariance_lagrangian", "CoulombAction", 1e-10}, gauge_lagrangian},
      {{"gauge_change_law", "mertektrafo_hatason", 1e-3}, gauge_change_law},
      {{"pzw_equivalence", "PZW_trafo", 1e-3}, pzw},
      {{"hamiltonian_legendre", "pzwHamiltonian", 1e-10},
       [](Context& c) {
         const auto h = hamiltonian_pzw(c.state(), c.mech());
         return Outcome{h.legendre, h.energy_form, rel_diff(h.legendre, h.energy_form)};
       }},
      {{"hamiltonian_multipolar", "pzwHamiltonian", 1e-5},
       [](Context& c) {
         const auto h = hamiltonian_pzw(c.state(), c.mech());
         return Outcome{h.multipolar_form, h.energy_form, rel_diff(h.multipolar_form, h.energy_form)};
       }},
      {{"supplement_orthogonality", "LagrangianSupplementTrick", 1e-10}, supplement},
      {{"poincare_condition", "A_P", 1e-12},
       [](Context& c) {
         const auto pts = random_ball_points(c.grid().length() / 8, 100, c.seed());
         return from_report(verify_poincare_condition(magnetic_field(c.state()), pts, c.popts(), 1.0));
       }},
      {{"b_reconstruction", "A_P_v_bol", 1e-3},
       [](Context& c) {
         const auto& g = c.grid();
         return from_report(verify_b_reconstruction(magnetic_field(c.state()), ball_sites(g, g.length() / 8, 2),
                                                    g.spacing() / 2, c.popts(), 1.0));
       }},
      {{"poincare_lagrangian", "PoinLagrangian", 1e-6},
       [](Context& c) {
         const double lp = lagrangian_poincare(c.state(), 0.0, c.mech(), c.popts()).total;
         const double lz = lagrangian_pzw(c.state(), c.mech()).total;
         return Outcome{lp, lz, rel_diff(lp, lz)};
       }},
      {{"magic_identity", "magicIdentity", 1e-4},
       [](Context& c) {
         const auto& m = c.magic();
         return Outcome{m.lhs, m.rhs, rel_diff(m.lhs, m.rhs)};
       }},
      {{"magic_total", "magicIdentity", 1e-4},
       [](Context& c) {
         const auto& m = c.magic();
         const double scale = std::abs(m.lhs) + std::abs(m.rhs);
         return Outcome{m.total, 0.0, scale == 0.0 ? std::abs(m.total) : std::abs(m.total) / scale};
       }},
  };
  return checks;
}

}  // namespace

const std::vector<CheckInfo>& known_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

bool is_known_check(const std::string& name) {
  const auto& k = known_checks();
  return std::any_of(k.begin(), k.end(), [&](const CheckInfo& c) { return c.name == name; });
}

SystemState initial_state(const Scenario& s) {
  const Grid g = make_grid(s);
  ParticleSet p = load_particles(s, g);
  const int m = s.radiation.m_max;
  VectorField a = random_transverse_field(g, s.seed, m, s.radiation.a_rms);
  VectorField e = random_transverse_field(g, s.seed + 1, m, s.radiation.e_rms);
  return SystemState{std::move(p), FieldState{std::move(a), std::move(e)}, 0.0};
}

std::vector<ReportRecord> run_suite(const Scenario& s) {
  Context ctx(s);
  std::ostringstream particles;
  write_particle_config(particles, ctx.particles());
  const std::string base = fnv1a_hex(canonical_json(s) + "\n" + particles.str());
  std::vector<ReportRecord> records;
  for (const auto& name : s.checks) {
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const CheckDef& c) { return c.info.name == name; });
    if (it == registry().end()) throw ConfigError("unknown check '" + name + "'");
    ReportRecord r;
    r.check = name;
    r.tag = it->info.tag;
    r.digest = fnv1a_hex(base + ":" + name);
    r.tolerance = ctx.tol(name);
    try {
      const Outcome o = it->run(ctx);
      r.lhs = o.lhs;
      r.rhs = o.rhs;
      r.residual = o.residual;
    } catch (const gaugelab::Error& e) {
      r.lhs = r.rhs = r.residual = std::numeric_limits<double>::quiet_NaN();
      r.message = e.what();
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace gaugelab::cli
