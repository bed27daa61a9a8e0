#include "gaugelab/random_fields.hpp"

#include <cmath>
#include <random>

#include "gaugelab/errors.hpp"
#include "gaugelab/fft.hpp"
#include "gaugelab/spectral_ops.hpp"

namespace gaugelab {

namespace {

ScalarField band_limited_noise(const Grid& g, std::mt19937_64& rng, int m_max) {
  if (m_max < 1 || m_max >= g.n() / 2) throw InvalidArgument("band limit must lie in [1, n/2)");
  std::normal_distribution<double> normal(0.0, 1.0);
  ScalarField noise(g);
  for (auto& v : noise.values()) v = normal(rng);
  auto spec = forward(noise);
  const int n = g.n();
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz <= n / 2; ++iz) {
        const bool keep = std::abs(g.signed_offset(ix)) <= m_max && std::abs(g.signed_offset(iy)) <= m_max &&
                          iz <= m_max && (ix | iy | iz) != 0;
        if (!keep) spec[spec.index(ix, iy, iz)] = 0.0;
      }
  return inverse(spec);
}

double rms_of(const VectorField& v) { return l2_norm(v) / std::sqrt(v.grid().volume()); }
double rms_of(const ScalarField& v) { return l2_norm(v) / std::sqrt(v.grid().volume()); }

}  // namespace

ScalarField random_scalar_field(const Grid& g, std::uint64_t seed, int m_max, double rms) {
  std::mt19937_64 rng(seed);
  auto f = band_limited_noise(g, rng, m_max);
  const double r = rms_of(f);
  return r > 0.0 ? f * (rms / r) : f;
}

VectorField random_transverse_field(const Grid& g, std::uint64_t seed, int m_max, double rms) {
  std::mt19937_64 rng(seed);
  auto x = band_limited_noise(g, rng, m_max);
  auto y = band_limited_noise(g, rng, m_max);
  auto z = band_limited_noise(g, rng, m_max);
  auto v = transverse_part(VectorField(std::move(x), std::move(y), std::move(z)));
  const double r = rms_of(v);
  return r > 0.0 ? v * (rms / r) : v;
}

GaugeFunction random_gauge_function(const Grid& g, std::uint64_t seed, int m_max, double rms) {
  std::mt19937_64 rng(seed);
  auto chi = band_limited_noise(g, rng, m_max);
  auto chi_dot = band_limited_noise(g, rng, m_max);
  chi *= rms / rms_of(chi);
  chi_dot *= rms / rms_of(chi_dot);
  return GaugeFunction{std::move(chi), std::move(chi_dot)};
}

ParticleSet random_atom(int z, double sigma, double r_min, double r_max, double v_max, std::uint64_t seed,
                        double electron_mass) {
  if (z < 1) throw InvalidArgument("random_atom: Z must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto direction = [&] {
    Vec3 d{normal(rng), normal(rng), normal(rng)};
    return d / norm(d);
  };
  std::vector<Particle> ps;
  ps.push_back(Particle{static_cast<double>(z), 1836.0 * z, {}, {}});
  for (int i = 0; i < z; ++i) {
    Particle e;
    e.charge = -1.0;
    e.mass = electron_mass;
    e.position = (r_min + (r_max - r_min) * uni(rng)) * direction();
    e.velocity = v_max * uni(rng) * direction();
    ps.push_back(e);
  }
  return ParticleSet(std::move(ps), sigma, true);
}

}  // namespace gaugelab
