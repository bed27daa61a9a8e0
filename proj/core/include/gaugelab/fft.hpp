#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "gaugelab/fields.hpp"
#include "gaugelab/grid.hpp"

namespace gaugelab {

using Complex = std::complex<double>;

/// Half-spectrum (real-to-complex layout) of a scalar lattice field:
/// n x n x (n/2 + 1) complex coefficients, unnormalized forward transform.
class ScalarSpectrum {
 public:
  explicit ScalarSpectrum(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int nz_half() const { return grid_.n() / 2 + 1; }
  std::size_t size() const { return data_.size(); }
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * grid_.n() + iy) * nz_half() + iz;
  }
  Complex operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

 private:
  Grid grid_;
  std::vector<Complex> data_;
};

struct VectorSpectrum {
  explicit VectorSpectrum(const Grid& grid) : comp{ScalarSpectrum(grid), ScalarSpectrum(grid), ScalarSpectrum(grid)} {}
  const Grid& grid() const { return comp[0].grid(); }
  std::array<ScalarSpectrum, 3> comp;
};

ScalarSpectrum forward(const ScalarField& f);
VectorSpectrum forward(const VectorField& v);
ScalarField inverse(const ScalarSpectrum& s);
VectorField inverse(const VectorSpectrum& s);

/// Wave vector bookkeeping for the half-spectrum.
///
/// `k` is the true wave vector 2*pi*m/L with m in (-n/2, n/2]. `kd` is the
/// wave vector used for odd derivatives: identical to k except that a
/// component sitting on the Nyquist index is zero, which keeps spectral
/// derivatives of real fields real.
class WaveVectors {
 public:
  explicit WaveVectors(const Grid& grid);

  Vec3 k(int ix, int iy, int iz) const { return {axis_[ix], axis_[iy], axis_[iz]}; }
  Vec3 kd(int ix, int iy, int iz) const { return {axis_d_[ix], axis_d_[iy], axis_d_[iz]}; }
  /// Multiplicity of a half-spectrum coefficient in Parseval sums (1 or 2).
  double weight(int iz) const { return (iz == 0 || iz == n_ / 2) ? 1.0 : 2.0; }

 private:
  int n_;
  std::vector<double> axis_;
  std::vector<double> axis_d_;
};

}  // namespace gaugelab
