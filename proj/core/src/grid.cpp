#include "gaugelab/grid.hpp"

#include <cmath>
#include <sstream>

#include "gaugelab/errors.hpp"

namespace gaugelab {

Grid::Grid(int n_per_axis, double box_length, double eps0, double mu0)
    : n_(n_per_axis), length_(box_length), eps0_(eps0), mu0_(mu0) {
  if (n_ < 8 || n_ % 2 != 0) {
    throw InvalidArgument("grid: n_per_axis must be even and >= 8, got " + std::to_string(n_));
  }
  if (!(length_ > 0.0) || !std::isfinite(length_)) {
    throw InvalidArgument("grid: box_length must be positive and finite");
  }
  if (!(eps0_ > 0.0) || !(mu0_ > 0.0) || !std::isfinite(c2())) {
    throw InvalidArgument("grid: eps0 and mu0 must be positive with finite c^2");
  }
}

double Grid::cell_volume() const {
  const double h = spacing();
  return h * h * h;
}

double Grid::c() const { return std::sqrt(c2()); }

Vec3 Grid::position(int ix, int iy, int iz) const {
  const double h = spacing();
  return {signed_offset(ix) * h, signed_offset(iy) * h, signed_offset(iz) * h};
}

Vec3 Grid::position(std::size_t index) const {
  const auto n = static_cast<std::size_t>(n_);
  const int iz = static_cast<int>(index % n);
  const int iy = static_cast<int>((index / n) % n);
  const int ix = static_cast<int>(index / (n * n));
  return position(ix, iy, iz);
}

namespace {
double wrap_coord(double x, double L) {
  double y = x - L * std::floor(x / L + 0.5);
  if (y >= 0.5 * L) y -= L;
  return y;
}
}  // namespace

Vec3 Grid::wrap(const Vec3& x) const {
  return {wrap_coord(x.x, length_), wrap_coord(x.y, length_), wrap_coord(x.z, length_)};
}

Vec3 Grid::displacement(const Vec3& a, const Vec3& b) const { return wrap(a - b); }

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) {
    std::ostringstream os;
    os << "grid mismatch: (n=" << a.n() << ", L=" << a.length() << ") vs (n=" << b.n()
       << ", L=" << b.length() << ")";
    throw GridMismatch(os.str());
  }
}

}  // namespace gaugelab
