#include "gaugelab_cli/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gaugelab/errors.hpp"
#include "gaugelab_cli/suite.hpp"

namespace gaugelab::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
void read_opt(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void validate(const Scenario& s) {
  if (s.name.empty()) throw ConfigError("scenario: name is empty");
  if (s.grid.n < 8 || s.grid.n % 2 != 0) throw ConfigError("scenario: grid.n must be even and >= 8");
  if (!(s.grid.length > 0) || !(s.grid.eps0 > 0) || !(s.grid.mu0 > 0))
    throw ConfigError("scenario: grid length, eps0 and mu0 must be positive");
  if (s.sigma_dx && !(*s.sigma_dx > 0)) throw ConfigError("scenario: sigma_dx must be positive");
  if (s.quadrature_order < 1) throw ConfigError("scenario: quadrature_order must be >= 1");
  if (!(s.fd_step > 0)) throw ConfigError("scenario: fd_step must be positive");
  if (s.radiation.a_rms < 0 || s.radiation.e_rms < 0) throw ConfigError("scenario: radiation rms must be >= 0");
  if (s.radiation.m_max < 1 || s.radiation.m_max >= s.grid.n / 2)
    throw ConfigError("scenario: radiation.m_max must lie in [1, n/2)");
  if (s.simulate.n_steps < 0 || s.simulate.output_stride < 1)
    throw ConfigError("scenario: simulate.n_steps must be >= 0 and output_stride >= 1");
  for (const auto& c : s.checks)
    if (!is_known_check(c)) throw ConfigError("scenario: unknown check '" + c + "'");
  for (const auto& [name, tol] : s.tolerances) {
    if (!is_known_check(name) && name != "energy_drift") throw ConfigError("scenario: tolerance for unknown check '" + name + "'");
    if (!(tol >= 0)) throw ConfigError("scenario: tolerance of '" + name + "' must be >= 0");
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir, const Overrides& ov) {
  Scenario s;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("scenario: top level must be an object");
    reject_unknown_keys(j,
                        {"name", "grid", "particles", "sigma_dx", "quadrature_order", "radiation", "fd_step", "seed",
                         "checks", "tolerances", "simulate"},
                        "scenario");
    s.name = j.at("name").get<std::string>();
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      reject_unknown_keys(g, {"n", "length", "eps0", "mu0"}, "scenario.grid");
      read_opt(g, "n", s.grid.n);
      read_opt(g, "length", s.grid.length);
      read_opt(g, "eps0", s.grid.eps0);
      read_opt(g, "mu0", s.grid.mu0);
    }
    s.particles = base_dir / j.at("particles").get<std::string>();
    if (j.contains("sigma_dx")) s.sigma_dx = j.at("sigma_dx").get<double>();
    read_opt(j, "quadrature_order", s.quadrature_order);
    if (j.contains("radiation")) {
      const auto& r = j.at("radiation");
      reject_unknown_keys(r, {"a_rms", "e_rms", "m_max"}, "scenario.radiation");
      read_opt(r, "a_rms", s.radiation.a_rms);
      read_opt(r, "e_rms", s.radiation.e_rms);
      read_opt(r, "m_max", s.radiation.m_max);
    }
    read_opt(j, "fd_step", s.fd_step);
    read_opt(j, "seed", s.seed);
    if (j.contains("checks")) {
      s.checks = j.at("checks").get<std::vector<std::string>>();
    } else {
      for (const auto& c : known_checks()) s.checks.push_back(c.name);
    }
    if (j.contains("tolerances")) s.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    if (j.contains("simulate")) {
      const auto& m = j.at("simulate");
      reject_unknown_keys(m, {"dt", "n_steps", "output_stride"}, "scenario.simulate");
      read_opt(m, "dt", s.simulate.dt);
      read_opt(m, "n_steps", s.simulate.n_steps);
      read_opt(m, "output_stride", s.simulate.output_stride);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }

  if (ov.seed) s.seed = *ov.seed;
  if (ov.grid) s.grid.n = *ov.grid;
  if (ov.sigma) s.sigma_dx = *ov.sigma;
  validate(s);

  for (const auto& c : known_checks()) s.tolerances.try_emplace(c.name, c.default_tolerance);
  s.tolerances.try_emplace("energy_drift", 1e-4);
  if (ov.tol_scale) {
    if (!(*ov.tol_scale >= 0)) throw ConfigError("--tol-scale must be >= 0");
    for (auto& [name, tol] : s.tolerances) tol *= *ov.tol_scale;
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path, const Overrides& ov) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path.parent_path(), ov);
}

std::string canonical_json(const Scenario& s) {
  ordered_json j;
  j["name"] = s.name;
  j["grid"] = {{"n", s.grid.n}, {"length", s.grid.length}, {"eps0", s.grid.eps0}, {"mu0", s.grid.mu0}};
  j["particles"] = s.particles.filename().string();
  j["sigma_dx"] = s.sigma_dx ? json(*s.sigma_dx) : json(nullptr);
  j["quadrature_order"] = s.quadrature_order;
  j["radiation"] = {{"a_rms", s.radiation.a_rms}, {"e_rms", s.radiation.e_rms}, {"m_max", s.radiation.m_max}};
  j["fd_step"] = s.fd_step;
  j["seed"] = s.seed;
  j["checks"] = s.checks;
  j["tolerances"] = s.tolerances;
  j["simulate"] = {
      {"dt", s.simulate.dt}, {"n_steps", s.simulate.n_steps}, {"output_stride", s.simulate.output_stride}};
  return j.dump();
}

Grid make_grid(const Scenario& s) { return Grid(s.grid.n, s.grid.length, s.grid.eps0, s.grid.mu0); }

ParticleSet load_particles(const Scenario& s, const Grid& g) {
  try {
    ParticleSet p = read_particle_config(s.particles);
    if (s.sigma_dx) p = p.with_sigma(*s.sigma_dx * g.spacing());
    require_compatible(p, g);
    return p;
  } catch (const gaugelab::Error& e) {
    throw ConfigError(std::string("particles: ") + e.what());
  }
}

}  // namespace gaugelab::cli
