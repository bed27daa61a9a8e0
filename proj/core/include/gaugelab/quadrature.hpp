#pragma once

#include <vector>

namespace gaugelab {

/// Gauss-Legendre rule mapped to [0, 1]; integrates polynomials of degree
/// up to 2 * order - 1 exactly, and the weights sum to 1.
struct SQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Throws InvalidArgument for order < 1.
SQuadrature gauss_legendre(int order);

}  // namespace gaugelab
