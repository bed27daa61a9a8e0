#pragma once

#include "gaugelab/fields.hpp"
#include "gaugelab/fft.hpp"

namespace gaugelab {

ScalarField gradient_component(const ScalarField& f, int axis);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& f);

/// Periodic solution of laplacian(phi) = -rho / eps0 with zero spatial mean.
/// Throws NonNeutralSource when |mean(rho)| > tol_neutrality * ||rho||_rms.
ScalarField poisson_solve(const ScalarField& rho, double eps0, double tol_neutrality = 1e-10);

struct HelmholtzParts {
  VectorField transverse;
  VectorField longitudinal;
};

/// Spectral Helmholtz split. The spatial mean (and every mode whose derivative
/// wave vector vanishes) is assigned to the transverse part.
HelmholtzParts helmholtz_split(const VectorField& v);
VectorField transverse_part(const VectorField& v);
VectorField longitudinal_part(const VectorField& v);

/// ||longitudinal_part(v)|| <= tol * ||v||.
bool is_transverse(const VectorField& v, double tol);
/// ||transverse_part(v)|| <= tol * ||v||.
bool is_longitudinal(const VectorField& v, double tol);

/// Same operators acting in place on spectra.
VectorSpectrum transverse_part(const VectorSpectrum& v);
VectorSpectrum curl(const VectorSpectrum& v);

/// Symmetric 3x3 tensor stored as xx, yy, zz, xy, xz, yz.
struct SymTensor3 {
  double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;
  double trace() const { return xx + yy + zz; }
  double operator()(int i, int j) const;
  Vec3 apply(const Vec3& v) const;
};

/// Real-space kernel of the lattice transverse projector at the lattice
/// displacement (dx, dy, dz) (in sites), normalized as a transverse delta
/// function: (P_perp v)(x) = cell_volume * sum_y K(x - y) v(y).
/// Evaluated by a direct sum over modes; O(n^3) per displacement.
SymTensor3 transverse_projector_kernel(const Grid& grid, int dx, int dy, int dz);

/// Kernel at every displacement, one tensor per lattice site (index = displacement).
std::vector<SymTensor3> transverse_projector_kernel_table(const Grid& grid);

/// Direct real-space convolution with a kernel table; O(n^6), meant for small grids.
VectorField convolve_with_kernel(const std::vector<SymTensor3>& kernel, const VectorField& v);

}  // namespace gaugelab
