#include "gaugelab/interpolation.hpp"

#include <array>
#include <cmath>

namespace gaugelab {

namespace {

// Lattice-node weights for one axis: `first` is the (unwrapped) index of the
// first stencil node, `w` the weights.
template <int Points>
struct AxisStencil {
  int first = 0;
  std::array<double, Points> w{};
};

template <int Points>
AxisStencil<Points> axis_stencil(double coord, double h) {
  const double u = coord / h;
  const double base = std::floor(u);
  const double t = u - base;
  AxisStencil<Points> s;
  constexpr int lo = -(Points / 2 - 1);
  s.first = static_cast<int>(base) + lo;
  for (int j = 0; j < Points; ++j) {
    const int nj = lo + j;
    double w = 1.0;
    for (int m = 0; m < Points; ++m) {
      const int nm = lo + m;
      if (m != j) w *= (t - nm) / static_cast<double>(nj - nm);
    }
    s.w[j] = w;
  }
  return s;
}

inline int wrap_index(int i, int n) {
  const int r = i % n;
  return r < 0 ? r + n : r;
}

template <int Points, typename Sample>
auto interpolate(const Grid& g, const Vec3& x, Sample&& sample) {
  const double h = g.spacing();
  const int n = g.n();
  const auto sx = axis_stencil<Points>(x.x, h);
  const auto sy = axis_stencil<Points>(x.y, h);
  const auto sz = axis_stencil<Points>(x.z, h);
  std::array<int, Points> iy_idx{}, iz_idx{};
  for (int j = 0; j < Points; ++j) {
    iy_idx[j] = wrap_index(sy.first + j, n);
    iz_idx[j] = wrap_index(sz.first + j, n);
  }
  decltype(sample(std::size_t{0})) acc{};
  for (int a = 0; a < Points; ++a) {
    if (sx.w[a] == 0.0) continue;
    const int ix = wrap_index(sx.first + a, n);
    decltype(acc) acc_y{};
    for (int b = 0; b < Points; ++b) {
      if (sy.w[b] == 0.0) continue;
      decltype(acc) acc_z{};
      const std::size_t row = g.index(ix, iy_idx[b], 0);
      for (int c = 0; c < Points; ++c) {
        if (sz.w[c] == 0.0) continue;
        acc_z += sample(row + iz_idx[c]) * sz.w[c];
      }
      acc_y += acc_z * sy.w[b];
    }
    acc += acc_y * sx.w[a];
  }
  return acc;
}

}  // namespace

Vec3 sample_at(const VectorField& v, const Vec3& x, Interpolation order) {
  const auto& cx = v.component(0);
  const auto& cy = v.component(1);
  const auto& cz = v.component(2);
  auto sample = [&](std::size_t i) { return Vec3{cx[i], cy[i], cz[i]}; };
  if (order == Interpolation::lagrange8) return interpolate<8>(v.grid(), x, sample);
  return interpolate<2>(v.grid(), x, sample);
}

double sample_at(const ScalarField& f, const Vec3& x, Interpolation order) {
  const auto& vals = f.values();
  auto sample = [&](std::size_t i) { return vals[i]; };
  if (order == Interpolation::lagrange8) return interpolate<8>(f.grid(), x, sample);
  return interpolate<2>(f.grid(), x, sample);
}

}  // namespace gaugelab
