#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gaugelab_cli/commands.hpp"

namespace cli = gaugelab::cli;

int main(int argc, char** argv) {
  CLI::App app{"gaugelab: lattice checks of light-matter gauge identities"};
  app.require_subcommand(1);

  std::string scenario, out_dir = ".";
  std::uint64_t seed = 0;
  double tol_scale = 1.0, sigma = 0.0;
  int grid = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario, "Scenario JSON file")->required();
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--seed", seed, "Seed for randomized inputs");
    sub->add_option("--tol-scale", tol_scale, "Uniform tolerance multiplier");
    sub->add_option("--grid", grid, "Lattice sites per axis");
    sub->add_option("--sigma", sigma, "Smearing width in lattice spacings");
  };
  auto overrides = [&](CLI::App* sub) {
    cli::Overrides ov;
    if (sub->count("--seed")) ov.seed = seed;
    if (sub->count("--tol-scale")) ov.tol_scale = tol_scale;
    if (sub->count("--grid")) ov.grid = grid;
    if (sub->count("--sigma")) ov.sigma = sigma;
    return ov;
  };

  auto* verify = app.add_subcommand("verify", "Run the scenario's identity checks");
  add_common(verify);
  auto* simulate = app.add_subcommand("simulate", "Integrate the scenario and write snapshots and energies");
  add_common(simulate);

  std::string snapshot, points, report_in;
  double phi0 = 0.0;
  auto* poincare = app.add_subcommand("poincare", "Tabulate Poincare-gauge potentials at given points");
  poincare->add_option("--snapshot", snapshot, "Snapshot with fields e and b")->required();
  poincare->add_option("--points", points, "Text file with one 'x y z' per line")->required();
  poincare->add_option("--phi0", phi0, "Scalar potential at the origin");
  poincare->add_option("--out", out_dir, "Output directory");

  auto* report = app.add_subcommand("report", "Re-render a saved report as CSV");
  report->add_option("--in", report_in, "report.jsonl to re-render")->required();
  report->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitConfigError;
  }

  if (verify->parsed()) return cli::cmd_verify(scenario, out_dir, overrides(verify), std::cerr);
  if (simulate->parsed()) return cli::cmd_simulate(scenario, out_dir, overrides(simulate), std::cerr);
  if (poincare->parsed()) return cli::cmd_poincare(snapshot, points, out_dir, phi0, std::cerr);
  return cli::cmd_report(report_in, out_dir, std::cerr);
}
