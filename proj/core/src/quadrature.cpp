#include "gaugelab/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "gaugelab/errors.hpp"

namespace gaugelab {

SQuadrature gauss_legendre(int order) {
  if (order < 1) throw InvalidArgument("gauss_legendre: order must be >= 1");
  SQuadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess for the i-th root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1, 1] -> [0, 1]; x is descending in i, so fill from both ends.
    q.nodes[i] = 0.5 * (1.0 - x);
    q.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    q.weights[i] = 0.5 * w;
    q.weights[n - 1 - i] = 0.5 * w;
  }
  return q;
}

}  // namespace gaugelab
