#pragma once

#include <string>
#include <vector>

#include "gaugelab/mechanics.hpp"
#include "gaugelab_cli/report.hpp"
#include "gaugelab_cli/scenario.hpp"

namespace gaugelab::cli {

struct CheckInfo {
  std::string name;
  std::string tag;
  double default_tolerance;
};

/// Every check `verify` knows, in the order it runs them.
const std::vector<CheckInfo>& known_checks();
bool is_known_check(const std::string& name);

/// Particles plus the scenario's seeded radiation field.
SystemState initial_state(const Scenario& s);

/// Runs the scenario's checks in declaration order, one record each, against
/// the scenario's (already scaled) tolerances.
std::vector<ReportRecord> run_suite(const Scenario& s);

}  // namespace gaugelab::cli
