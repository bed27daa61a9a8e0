#pragma once

#include <cstddef>

#include "gaugelab/vec3.hpp"

namespace gaugelab {

/// Periodic cubic lattice with the vacuum constants the fields live in.
///
/// Site (ix, iy, iz) sits at the signed coordinate (m_x, m_y, m_z) * spacing with
/// m = i for i < n/2 and m = i - n otherwise, so the origin is site (0, 0, 0) and
/// every coordinate lies in [-L/2, L/2). Site data is stored row-major with z
/// fastest: index = (ix * n + iy) * n + iz.
class Grid {
 public:
  Grid(int n_per_axis, double box_length, double eps0 = 1.0, double mu0 = 1.0);

  int n() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / n_; }
  double cell_volume() const;
  double volume() const { return length_ * length_ * length_; }
  double eps0() const { return eps0_; }
  double mu0() const { return mu0_; }
  double c() const;
  double c2() const { return 1.0 / (eps0_ * mu0_); }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n_ + iy) * n_ + iz;
  }
  /// Signed integer offset of lattice index i along one axis.
  int signed_offset(int i) const { return i < n_ / 2 ? i : i - n_; }
  Vec3 position(int ix, int iy, int iz) const;
  Vec3 position(std::size_t index) const;

  /// Maps x into the periodic box [-L/2, L/2)^3.
  Vec3 wrap(const Vec3& x) const;
  /// Minimum-image displacement a - b.
  Vec3 displacement(const Vec3& a, const Vec3& b) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
  double length_;
  double eps0_;
  double mu0_;
};

/// Throws GridMismatch unless a and b describe the same lattice.
void require_same_grid(const Grid& a, const Grid& b);

}  // namespace gaugelab
