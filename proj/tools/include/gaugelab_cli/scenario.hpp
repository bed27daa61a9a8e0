#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugelab/grid.hpp"
#include "gaugelab/particles.hpp"

namespace gaugelab::cli {

/// Unreadable or inconsistent input; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  int n = 64;
  double length = 1.0;
  double eps0 = 1.0;
  double mu0 = 0.01;
};

/// Seeded random transverse field put on top of the particles' Coulomb field.
struct RadiationSpec {
  double a_rms = 0.0;
  double e_rms = 0.0;
  int m_max = 3;
};

struct SimulateSpec {
  double dt = 0.0;
  int n_steps = 0;
  int output_stride = 1;
};

struct Scenario {
  std::string name;
  GridSpec grid;
  std::filesystem::path particles;
  /// Smearing width in lattice spacings; overrides the particle file.
  std::optional<double> sigma_dx;
  int quadrature_order = 32;
  RadiationSpec radiation;
  /// Time step of the centred differences in derivative checks.
  double fd_step = 1e-3;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  std::map<std::string, double> tolerances;
  SimulateSpec simulate;
};

/// Command-line overrides applied after the file is read.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_scale;
  std::optional<int> grid;
  std::optional<double> sigma;
};

/// Reads a JSON scenario; the particle path is resolved against the
/// scenario's directory. Throws ConfigError.
Scenario load_scenario(const std::filesystem::path& path, const Overrides& ov = {});
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir, const Overrides& ov = {});

/// Canonical JSON rendering of the scenario (after overrides).
std::string canonical_json(const Scenario& s);

Grid make_grid(const Scenario& s);
/// Particle set from the referenced file, with sigma_dx applied. Throws ConfigError.
ParticleSet load_particles(const Scenario& s, const Grid& g);

}  // namespace gaugelab::cli
