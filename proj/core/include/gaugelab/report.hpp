#pragma once

#include <string>

namespace gaugelab {

/// Outcome of one numerical identity check.
struct ResidualReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

}  // namespace gaugelab
