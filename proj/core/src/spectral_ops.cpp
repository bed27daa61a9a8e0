#include "gaugelab/spectral_ops.hpp"

#include <cmath>
#include <numbers>

#include "gaugelab/errors.hpp"

namespace gaugelab {

namespace {

constexpr Complex kI{0.0, 1.0};

// Calls fn(ix, iy, iz, flat_index) over the half spectrum.
template <typename Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
  const int n = g.n();
  const int nzh = n / 2 + 1;
  std::size_t idx = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < nzh; ++iz, ++idx) fn(ix, iy, iz, idx);
}

}  // namespace

ScalarField gradient_component(const ScalarField& f, int axis) {
  ScalarSpectrum s = forward(f);
  WaveVectors kv(f.grid());
  for_each_mode(f.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    s[i] *= kI * kv.kd(ix, iy, iz)[axis];
  });
  return inverse(s);
}

VectorField gradient(const ScalarField& f) {
  const ScalarSpectrum s = forward(f);
  VectorSpectrum out(f.grid());
  WaveVectors kv(f.grid());
  for_each_mode(f.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = kv.kd(ix, iy, iz);
    for (int c = 0; c < 3; ++c) out.comp[c][i] = kI * k[c] * s[i];
  });
  return inverse(out);
}

ScalarField divergence(const VectorField& v) {
  const VectorSpectrum s = forward(v);
  ScalarSpectrum out(v.grid());
  WaveVectors kv(v.grid());
  for_each_mode(v.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = kv.kd(ix, iy, iz);
    out[i] = kI * (k.x * s.comp[0][i] + k.y * s.comp[1][i] + k.z * s.comp[2][i]);
  });
  return inverse(out);
}

VectorSpectrum curl(const VectorSpectrum& s) {
  VectorSpectrum out(s.grid());
  WaveVectors kv(s.grid());
  for_each_mode(s.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = kv.kd(ix, iy, iz);
    const Complex ax = s.comp[0][i], ay = s.comp[1][i], az = s.comp[2][i];
    out.comp[0][i] = kI * (k.y * az - k.z * ay);
    out.comp[1][i] = kI * (k.z * ax - k.x * az);
    out.comp[2][i] = kI * (k.x * ay - k.y * ax);
  });
  return out;
}

VectorField curl(const VectorField& v) { return inverse(curl(forward(v))); }

ScalarField laplacian(const ScalarField& f) {
  ScalarSpectrum s = forward(f);
  WaveVectors kv(f.grid());
  for_each_mode(f.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    s[i] *= -norm2(kv.kd(ix, iy, iz));
  });
  return inverse(s);
}

ScalarField poisson_solve(const ScalarField& rho, double eps0, double tol_neutrality) {
  double sum2 = 0.0;
  for (double r : rho.values()) sum2 += r * r;
  const double rms = std::sqrt(sum2 / static_cast<double>(rho.size()));
  const double mean = rho.mean();
  if (std::abs(mean) > tol_neutrality * rms) {
    throw NonNeutralSource("poisson_solve: source mean " + std::to_string(mean) +
                           " exceeds neutrality tolerance (rms " + std::to_string(rms) + ")");
  }
  ScalarSpectrum s = forward(rho);
  WaveVectors kv(rho.grid());
  for_each_mode(rho.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    const double k2 = norm2(kv.kd(ix, iy, iz));
    s[i] = k2 > 0.0 ? s[i] / (eps0 * k2) : Complex{};
  });
  return inverse(s);
}

namespace {

VectorSpectrum longitudinal_spectrum(const VectorSpectrum& s) {
  VectorSpectrum out(s.grid());
  WaveVectors kv(s.grid());
  for_each_mode(s.grid(), [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = kv.kd(ix, iy, iz);
    const double k2 = norm2(k);
    if (k2 == 0.0) return;
    const Complex kv_dot = (k.x * s.comp[0][i] + k.y * s.comp[1][i] + k.z * s.comp[2][i]) / k2;
    for (int c = 0; c < 3; ++c) out.comp[c][i] = k[c] * kv_dot;
  });
  return out;
}

}  // namespace

VectorSpectrum transverse_part(const VectorSpectrum& s) {
  VectorSpectrum out = longitudinal_spectrum(s);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < out.comp[c].size(); ++i) out.comp[c][i] = s.comp[c][i] - out.comp[c][i];
  return out;
}

HelmholtzParts helmholtz_split(const VectorField& v) {
  VectorField longitudinal = inverse(longitudinal_spectrum(forward(v)));
  VectorField transverse = v - longitudinal;
  return {std::move(transverse), std::move(longitudinal)};
}

VectorField transverse_part(const VectorField& v) { return helmholtz_split(v).transverse; }

VectorField longitudinal_part(const VectorField& v) { return inverse(longitudinal_spectrum(forward(v))); }

bool is_transverse(const VectorField& v, double tol) {
  return l2_norm(longitudinal_part(v)) <= tol * l2_norm(v);
}

bool is_longitudinal(const VectorField& v, double tol) {
  return l2_norm(transverse_part(v)) <= tol * l2_norm(v);
}

double SymTensor3::operator()(int i, int j) const {
  if (i == j) return i == 0 ? xx : (i == 1 ? yy : zz);
  const int s = i + j;  // 1: xy, 2: xz, 3: yz
  return s == 1 ? xy : (s == 2 ? xz : yz);
}

Vec3 SymTensor3::apply(const Vec3& v) const {
  return {xx * v.x + xy * v.y + xz * v.z, xy * v.x + yy * v.y + yz * v.z, xz * v.x + yz * v.y + zz * v.z};
}

SymTensor3 transverse_projector_kernel(const Grid& grid, int dx, int dy, int dz) {
  const int n = grid.n();
  WaveVectors kv(grid);
  const double two_pi_over_n = 2.0 * std::numbers::pi / n;
  SymTensor3 acc;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const Vec3 k = kv.kd(ix, iy, iz);
        const double k2 = norm2(k);
        const double phase = two_pi_over_n * (static_cast<double>(ix) * dx + static_cast<double>(iy) * dy +
                                              static_cast<double>(iz) * dz);
        const double c = std::cos(phase);
        if (k2 == 0.0) {
          acc.xx += c;
          acc.yy += c;
          acc.zz += c;
          continue;
        }
        acc.xx += c * (1.0 - k.x * k.x / k2);
        acc.yy += c * (1.0 - k.y * k.y / k2);
        acc.zz += c * (1.0 - k.z * k.z / k2);
        acc.xy -= c * k.x * k.y / k2;
        acc.xz -= c * k.x * k.z / k2;
        acc.yz -= c * k.y * k.z / k2;
      }
  const double norm = 1.0 / grid.volume();
  acc.xx *= norm;
  acc.yy *= norm;
  acc.zz *= norm;
  acc.xy *= norm;
  acc.xz *= norm;
  acc.yz *= norm;
  return acc;
}

std::vector<SymTensor3> transverse_projector_kernel_table(const Grid& grid) {
  const int n = grid.n();
  std::vector<SymTensor3> table(grid.size());
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) table[grid.index(ix, iy, iz)] = transverse_projector_kernel(grid, ix, iy, iz);
  return table;
}

VectorField convolve_with_kernel(const std::vector<SymTensor3>& kernel, const VectorField& v) {
  const Grid& g = v.grid();
  if (kernel.size() != g.size()) throw GridMismatch("convolve_with_kernel: kernel table size mismatch");
  const int n = g.n();
  const double dv = g.cell_volume();
  VectorField out(g);
  for (int ax = 0; ax < n; ++ax)
    for (int ay = 0; ay < n; ++ay)
      for (int az = 0; az < n; ++az) {
        Vec3 acc;
        for (int bx = 0; bx < n; ++bx)
          for (int by = 0; by < n; ++by)
            for (int bz = 0; bz < n; ++bz) {
              const SymTensor3& k = kernel[g.index((ax - bx + n) % n, (ay - by + n) % n, (az - bz + n) % n)];
              acc += k.apply(v.at(g.index(bx, by, bz)));
            }
        out.set(g.index(ax, ay, az), acc * dv);
      }
  return out;
}

}  // namespace gaugelab
