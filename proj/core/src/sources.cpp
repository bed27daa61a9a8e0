#include "gaugelab/sources.hpp"

#include <cmath>
#include <numbers>

#include "gaugelab/errors.hpp"
#include "gaugelab/spectral_ops.hpp"

namespace gaugelab {

namespace {

constexpr int kImages = 2;
constexpr double kCutoff = 1e-16;

}  // namespace

SmearedDelta::SmearedDelta(const Grid& grid, double sigma) : grid_(grid), sigma_(sigma) {
  if (!(sigma >= 3.0 * grid.spacing() * (1.0 - 1e-12)))
    throw SmearingTooNarrow("smearing width must be at least 3 lattice spacings");
}

double SmearedDelta::peak() const { return std::pow(2.0 * std::numbers::pi * sigma_ * sigma_, -1.5); }

double SmearedDelta::axis_value(double d, double* slope) const {
  const double L = grid_.length();
  const double norm1 = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma_);
  const double inv2s2 = 0.5 / (sigma_ * sigma_);
  d -= L * std::round(d / L);
  double v = 0.0;
  double s = 0.0;
  for (int m = -kImages; m <= kImages; ++m) {
    const double u = d + m * L;
    const double e = std::exp(-u * u * inv2s2) * norm1;
    v += e;
    s -= u / (sigma_ * sigma_) * e;
  }
  if (slope) *slope = s;
  return v;
}

double SmearedDelta::operator()(const Vec3& r) const {
  return axis_value(r.x, nullptr) * axis_value(r.y, nullptr) * axis_value(r.z, nullptr);
}

SmearedDelta::Stencil SmearedDelta::stencil(const Vec3& centre, bool with_slope) const {
  Stencil st;
  const int n = grid_.n();
  const double dx = grid_.spacing();
  const double floor_value = kCutoff / (std::sqrt(2.0 * std::numbers::pi) * sigma_);
  for (int a = 0; a < 3; ++a) {
    auto& ax = st.axis[a];
    for (int i = 0; i < n; ++i) {
      double slope = 0.0;
      const double v = axis_value(grid_.signed_offset(i) * dx - centre[a], with_slope ? &slope : nullptr);
      if (v < floor_value) continue;
      ax.sites.push_back(i);
      ax.value.push_back(v);
      ax.slope.push_back(slope);
    }
  }
  return st;
}

void SmearedDelta::deposit(ScalarField& field, const Vec3& centre, double weight) const {
  require_same_grid(grid_, field.grid());
  if (weight == 0.0) return;
  const auto st = stencil(centre, false);
  const auto& X = st.axis[0];
  const auto& Y = st.axis[1];
  const auto& Z = st.axis[2];
  for (std::size_t a = 0; a < X.sites.size(); ++a)
    for (std::size_t b = 0; b < Y.sites.size(); ++b) {
      const double wxy = weight * X.value[a] * Y.value[b];
      const std::size_t row = grid_.index(X.sites[a], Y.sites[b], 0);
      for (std::size_t c = 0; c < Z.sites.size(); ++c) field[row + Z.sites[c]] += wxy * Z.value[c];
    }
}

void SmearedDelta::deposit(VectorField& field, const Vec3& centre, const Vec3& weight) const {
  require_same_grid(grid_, field.grid());
  if (weight == Vec3{}) return;
  const auto st = stencil(centre, false);
  const auto& X = st.axis[0];
  const auto& Y = st.axis[1];
  const auto& Z = st.axis[2];
  auto& fx = field.component(0);
  auto& fy = field.component(1);
  auto& fz = field.component(2);
  for (std::size_t a = 0; a < X.sites.size(); ++a)
    for (std::size_t b = 0; b < Y.sites.size(); ++b) {
      const double vxy = X.value[a] * Y.value[b];
      const std::size_t row = grid_.index(X.sites[a], Y.sites[b], 0);
      for (std::size_t c = 0; c < Z.sites.size(); ++c) {
        const double v = vxy * Z.value[c];
        const std::size_t i = row + Z.sites[c];
        fx[i] += weight.x * v;
        fy[i] += weight.y * v;
        fz[i] += weight.z * v;
      }
    }
}

void SmearedDelta::deposit_directional(VectorField& field, const Vec3& centre, const Vec3& weight,
                                       const Vec3& direction) const {
  require_same_grid(grid_, field.grid());
  if (weight == Vec3{} || direction == Vec3{}) return;
  const auto st = stencil(centre, true);
  const auto& X = st.axis[0];
  const auto& Y = st.axis[1];
  const auto& Z = st.axis[2];
  auto& fx = field.component(0);
  auto& fy = field.component(1);
  auto& fz = field.component(2);
  for (std::size_t a = 0; a < X.sites.size(); ++a)
    for (std::size_t b = 0; b < Y.sites.size(); ++b) {
      const double vxy = X.value[a] * Y.value[b];
      const double gx = direction.x * X.slope[a] * Y.value[b];
      const double gy = direction.y * X.value[a] * Y.slope[b];
      const std::size_t row = grid_.index(X.sites[a], Y.sites[b], 0);
      for (std::size_t c = 0; c < Z.sites.size(); ++c) {
        const double d = (gx + gy) * Z.value[c] + direction.z * vxy * Z.slope[c];
        const std::size_t i = row + Z.sites[c];
        fx[i] += weight.x * d;
        fy[i] += weight.y * d;
        fz[i] += weight.z * d;
      }
    }
}

double SmearedDelta::smeared_sample(const ScalarField& f, const Vec3& x) const {
  require_same_grid(grid_, f.grid());
  const auto st = stencil(x, false);
  const auto& X = st.axis[0];
  const auto& Y = st.axis[1];
  const auto& Z = st.axis[2];
  double acc = 0.0;
  for (std::size_t a = 0; a < X.sites.size(); ++a)
    for (std::size_t b = 0; b < Y.sites.size(); ++b) {
      const std::size_t row = grid_.index(X.sites[a], Y.sites[b], 0);
      double line = 0.0;
      for (std::size_t c = 0; c < Z.sites.size(); ++c) line += Z.value[c] * f[row + Z.sites[c]];
      acc += X.value[a] * Y.value[b] * line;
    }
  return acc * grid_.cell_volume();
}

Vec3 SmearedDelta::smeared_sample(const VectorField& f, const Vec3& x) const {
  require_same_grid(grid_, f.grid());
  const auto st = stencil(x, false);
  const auto& X = st.axis[0];
  const auto& Y = st.axis[1];
  const auto& Z = st.axis[2];
  Vec3 acc;
  for (std::size_t a = 0; a < X.sites.size(); ++a)
    for (std::size_t b = 0; b < Y.sites.size(); ++b) {
      const std::size_t row = grid_.index(X.sites[a], Y.sites[b], 0);
      Vec3 line;
      for (std::size_t c = 0; c < Z.sites.size(); ++c) line += Z.value[c] * f.at(row + Z.sites[c]);
      acc += X.value[a] * Y.value[b] * line;
    }
  return acc * grid_.cell_volume();
}

ScalarField charge_density(const ParticleSet& p, const Grid& g) {
  require_compatible(p, g);
  const SmearedDelta delta(g, p.sigma());
  ScalarField rho(g);
  for (const auto& q : p.particles()) delta.deposit(rho, q.position, q.charge);
  return rho;
}

VectorField current_density(const ParticleSet& p, const Grid& g) {
  require_compatible(p, g);
  const SmearedDelta delta(g, p.sigma());
  VectorField j(g);
  for (const auto& q : p.particles()) delta.deposit(j, q.position, q.charge * q.velocity);
  return j;
}

VectorField longitudinal_field(const ParticleSet& p, const Grid& g) {
  return -gradient(poisson_solve(charge_density(p, g), g.eps0()));
}

double continuity_residual(const ParticleSet& before, const ParticleSet& after, const Grid& g, double dt) {
  if (before.size() != after.size()) throw InvalidArgument("continuity_residual: particle count mismatch");
  std::vector<Vec3> xm(before.size());
  std::vector<Vec3> vm(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    xm[i] = 0.5 * (before[i].position + after[i].position);
    vm[i] = 0.5 * (before[i].velocity + after[i].velocity);
  }
  const auto mid = before.with_kinematics(xm, vm);
  auto drho = charge_density(after, g) - charge_density(before, g);
  drho *= 1.0 / dt;
  const double scale = l2_norm(drho);
  const double res = l2_norm(drho + divergence(current_density(mid, g)));
  if (scale == 0.0) return res;
  return res / scale;
}

double lattice_self_energy(const Grid& g, double sigma) {
  const SmearedDelta delta(g, sigma);
  ScalarField rho(g);
  delta.deposit(rho, Vec3{}, 1.0);
  const double mean = rho.mean();
  for (auto& v : rho.values()) v -= mean;
  const auto phi = poisson_solve(rho, g.eps0());
  return 0.5 * inner_product(rho, phi);
}

double free_space_self_energy(double sigma, double eps0) {
  return 1.0 / (8.0 * std::pow(std::numbers::pi, 1.5) * eps0 * sigma);
}

double free_space_pair_energy(const ParticleSet& p, const Grid& g) {
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      const double r = norm(g.displacement(p[a].position, p[b].position));
      const double kernel = r > 0.0 ? std::erf(r / (2.0 * p.sigma())) / r
                                    : 1.0 / (std::sqrt(std::numbers::pi) * p.sigma());
      acc += p[a].charge * p[b].charge * kernel / (4.0 * std::numbers::pi * g.eps0());
    }
  return acc;
}

}  // namespace gaugelab
