#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "gaugelab_cli/scenario.hpp"

namespace gaugelab::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailure = 1, kExitConfigError = 2 };

/// Writes report.jsonl and report.csv into out_dir.
int cmd_verify(const std::filesystem::path& scenario, const std::filesystem::path& out_dir, const Overrides& ov,
               std::ostream& log);

/// Writes energy.csv, snapshot_<step>.glsnap, particles_<step>.txt and report.jsonl into out_dir.
int cmd_simulate(const std::filesystem::path& scenario, const std::filesystem::path& out_dir, const Overrides& ov,
                 std::ostream& log);

/// Writes poincare.csv into out_dir. The snapshot must hold vector fields "e" and "b".
int cmd_poincare(const std::filesystem::path& snapshot, const std::filesystem::path& points,
                 const std::filesystem::path& out_dir, double phi0, std::ostream& log);

/// Re-renders a saved report.jsonl as report.csv in out_dir.
int cmd_report(const std::filesystem::path& jsonl, const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace gaugelab::cli
