#pragma once

#include <cstdint>
#include <vector>

#include "gaugelab/fields.hpp"
#include "gaugelab/interpolation.hpp"
#include "gaugelab/quadrature.hpp"
#include "gaugelab/report.hpp"

namespace gaugelab {

/// Pointwise Poincare-gauge construction about the origin. Line integrals run
/// over the segment from the origin to x, sampled with `interp` at the nodes
/// of `quad`; points farther than trusted_fraction * L from the origin are
/// rejected with OutOfTrustedRegion.
struct PoincareOptions {
  SQuadrature quad = gauss_legendre(32);
  Interpolation interp = Interpolation::lagrange8;
  double trusted_fraction = 0.25;
};

/// u(x) = int_0^1 E(s x) ds.
Vec3 poincare_auxiliary_u(const VectorField& e, const Vec3& x, const PoincareOptions& opts = {});
/// v(x) = int_0^1 s B(s x) ds.
Vec3 poincare_auxiliary_v(const VectorField& b, const Vec3& x, const PoincareOptions& opts = {});

/// phi_P(x) = phi0 - x . u(x).
double poincare_scalar_potential(const VectorField& e, const Vec3& x, double phi0 = 0.0,
                                 const PoincareOptions& opts = {});
/// A_P(x) = -x cross v(x); orthogonal to x by construction.
Vec3 poincare_vector_potential(const VectorField& b, const Vec3& x, const PoincareOptions& opts = {});

struct PoincarePotentials {
  double phi = 0.0;
  Vec3 a;
};
PoincarePotentials poincare_potentials(const VectorField& e, const VectorField& b, const Vec3& x, double phi0 = 0.0,
                                       const PoincareOptions& opts = {});

/// Lattice site positions with |x| <= radius, every `stride`-th site per axis.
std::vector<Vec3> ball_sites(const Grid& g, double radius, int stride = 1);
/// Uniformly distributed points in the ball |x| <= radius.
std::vector<Vec3> random_ball_points(double radius, int count, std::uint64_t seed);

/// max |x . A_P(x)| over the points relative to max |x| |A_P(x)|.
ResidualReport verify_poincare_condition(const VectorField& b, const std::vector<Vec3>& points,
                                         const PoincareOptions& opts = {}, double tol = 1e-12);

/// Relative L2 mismatch between curl A_P (4th-order central differences of
/// step h) and B sampled at the points.
ResidualReport verify_b_reconstruction(const VectorField& b, const std::vector<Vec3>& points, double h,
                                       const PoincareOptions& opts = {}, double tol = 1e-3);

/// Relative L2 mismatch between -dA_P/dt - grad phi_P and E at the points.
/// dA_P/dt is the centred difference of A_P built from b_prev and b_next, which
/// are 2 dt apart around the instant of e_mid.
ResidualReport verify_e_reconstruction(const VectorField& e_mid, const VectorField& b_prev, const VectorField& b_next,
                                       double dt, const std::vector<Vec3>& points, double h,
                                       const PoincareOptions& opts = {}, double phi0 = 0.0, double tol = 1e-3);

struct AuxiliaryReport {
  /// rms |curl u + dv/dt| over rms Frobenius norm of grad u.
  ResidualReport curl_condition;
  /// rms |div v| over rms Frobenius norm of grad v.
  ResidualReport divergence_condition;
};

/// Checks curl u = -dv/dt and div v = 0 half way between two snapshots dt
/// apart, with second-order central differences of step h.
AuxiliaryReport verify_auxiliary_conditions(const VectorField& e0, const VectorField& e1, const VectorField& b0,
                                            const VectorField& b1, double dt, const std::vector<Vec3>& points,
                                            double h, const PoincareOptions& opts = {}, double tol_fd = 1e-2);

}  // namespace gaugelab
