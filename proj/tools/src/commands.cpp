#include "gaugelab_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "gaugelab/dynamics.hpp"
#include "gaugelab/errors.hpp"
#include "gaugelab/poincare.hpp"
#include "gaugelab/snapshot.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab_cli/report.hpp"
#include "gaugelab_cli/suite.hpp"

namespace gaugelab::cli {

namespace {

// -0 from a vanishing product prints as "-0"
double unsigned_zero(double v) { return v == 0.0 ? 0.0 : v; }

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

int summarize(const std::vector<ReportRecord>& records, std::ostream& log) {
  int failed = 0;
  for (const auto& r : records) {
    log << fmt::format("{:<28} {:<32} residual {:.3e} tol {:.1e} {}\n", r.check, r.tag, r.residual, r.tolerance,
                       r.status());
    if (!r.message.empty()) log << "    " << r.message << '\n';
    if (!r.pass()) ++failed;
  }
  log << fmt::format("{} of {} checks passed\n", records.size() - failed, records.size());
  return failed == 0 ? kExitOk : kExitCheckFailure;
}

Snapshot make_snapshot(const SystemState& s) {
  Snapshot snap(s.grid(), s.time);
  snap.put("a_perp", s.field.a_perp);
  snap.put("e_perp", s.field.e_perp);
  snap.put("e", electric_field(s));
  snap.put("b", magnetic_field(s));
  snap.put("rho", charge_density(s.particles, s.grid()));
  return snap;
}

void write_state(const std::filesystem::path& dir, int step, const SystemState& s) {
  write_snapshot(dir / fmt::format("snapshot_{:06d}.glsnap", step), make_snapshot(s));
  std::ofstream out(dir / fmt::format("particles_{:06d}.txt", step));
  if (!out) throw ConfigError("cannot write particle file in " + dir.string());
  write_particle_config(out, s.particles);
}

std::vector<Vec3> read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read points file " + path.string());
  std::vector<Vec3> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Vec3 x;
    if (!(ls >> x.x)) continue;
    std::string extra;
    if (!(ls >> x.y >> x.z) || (ls >> extra))
      throw ConfigError(fmt::format("{}:{}: expected three coordinates", path.string(), line_no));
    pts.push_back(x);
  }
  return pts;
}

template <class F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    log << "ConfigError: " << e.what() << '\n';
  } catch (const StabilityViolation& e) {
    log << "StabilityViolation: " << e.what() << '\n';
  } catch (const FormatError& e) {
    log << "FormatError: " << e.what() << '\n';
  } catch (const gaugelab::Error& e) {
    log << "ConfigError: " << e.what() << '\n';
  }
  return kExitConfigError;
}

}  // namespace

int cmd_verify(const std::filesystem::path& scenario, const std::filesystem::path& out_dir, const Overrides& ov,
               std::ostream& log) {
  return guarded(log, [&] {
    const Scenario s = load_scenario(scenario, ov);
    ensure_dir(out_dir);
    const auto records = run_suite(s);
    write_jsonl(out_dir / "report.jsonl", records);
    write_csv(out_dir / "report.csv", records);
    return summarize(records, log);
  });
}

int cmd_simulate(const std::filesystem::path& scenario, const std::filesystem::path& out_dir, const Overrides& ov,
                 std::ostream& log) {
  return guarded(log, [&] {
    const Scenario s = load_scenario(scenario, ov);
    const SystemState s0 = initial_state(s);
    const TrajectoryConfig cfg{s.simulate.dt, s.simulate.n_steps, s.simulate.output_stride, Integrator::leapfrog};
    validate(cfg, s0.grid());
    ensure_dir(out_dir);

    std::ofstream energy(out_dir / "energy.csv");
    if (!energy) throw ConfigError("cannot write energy.csv");
    energy << "step,time,kinetic,field,radiation,total,drift\n";
    Evolver ev(s0);
    const double e0 = ev.energy().total;
    auto emit = [&](int k) {
      const auto e = ev.energy();
      energy << fmt::format("{},{},{},{},{},{},{}\n", k, e.time, e.kinetic, e.field, e.radiation, e.total,
                            (e.total - e0) / std::abs(e0));
      write_state(out_dir, k, k == 0 ? s0 : ev.state());
    };
    emit(0);
    for (int k = 1; k <= cfg.n_steps; ++k) {
      ev.advance(cfg.dt);
      if (k % cfg.output_stride == 0 || k == cfg.n_steps) emit(k);
    }

    const double e1 = ev.energy().total;
    ReportRecord r;
    r.check = "energy_drift";
    r.tag = "pzwHamiltonian";
    std::ostringstream particles;
    write_particle_config(particles, s0.particles);
    r.digest = fnv1a_hex(canonical_json(s) + "\n" + particles.str() + ":energy_drift");
    r.lhs = e1;
    r.rhs = e0;
    r.residual = std::abs(e1 - e0) / std::abs(e0);
    r.tolerance = s.tolerances.at("energy_drift");
    write_jsonl(out_dir / "report.jsonl", {r});
    return summarize({r}, log);
  });
}

int cmd_poincare(const std::filesystem::path& snapshot, const std::filesystem::path& points,
                 const std::filesystem::path& out_dir, double phi0, std::ostream& log) {
  return guarded(log, [&] {
    if (!std::filesystem::exists(snapshot)) throw ConfigError("cannot read snapshot " + snapshot.string());
    const Snapshot snap = read_snapshot(snapshot);
    if (!snap.has("e") || !snap.has("b")) throw ConfigError("snapshot lacks vector fields 'e' and 'b'");
    const VectorField& e = snap.vector("e");
    const VectorField& b = snap.vector("b");
    const auto pts = read_points(points);
    ensure_dir(out_dir);
    std::ofstream out(out_dir / "poincare.csv");
    if (!out) throw ConfigError("cannot write poincare.csv");
    out << "x,y,z,phi_p,a_x,a_y,a_z,x_dot_a,status\n";
    int flagged = 0;
    for (const auto& x : pts) {
      try {
        const auto pp = poincare_potentials(e, b, x, phi0);
        out << fmt::format("{},{},{},{},{},{},{},{},ok\n", x.x, x.y, x.z, unsigned_zero(pp.phi),
                           unsigned_zero(pp.a.x), unsigned_zero(pp.a.y), unsigned_zero(pp.a.z),
                           unsigned_zero(dot(x, pp.a)));
      } catch (const OutOfTrustedRegion&) {
        out << fmt::format("{},{},{},,,,,,out_of_trusted_region\n", x.x, x.y, x.z);
        ++flagged;
      }
    }
    log << fmt::format("{} points, {} outside the trusted ball\n", pts.size(), flagged);
    return kExitOk;
  });
}

int cmd_report(const std::filesystem::path& jsonl, const std::filesystem::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    std::ifstream in(jsonl);
    if (!in) throw ConfigError("cannot read report " + jsonl.string());
    const auto records = read_jsonl(in);
    ensure_dir(out_dir);
    write_csv(out_dir / "report.csv", records);
    return summarize(records, log);
  });
}

}  // namespace gaugelab::cli
