#include "gaugelab/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "gaugelab/errors.hpp"
#include "gaugelab/fft.hpp"

namespace gaugelab {

namespace {

// Rotates v about the angular velocity omega by |omega| * tau.
Vec3 rotate(const Vec3& v, const Vec3& omega, double tau) {
  const double w = norm(omega);
  if (w == 0.0) return v;
  const Vec3 axis = omega / w;
  const double th = w * tau;
  const double c = std::cos(th);
  const double s = std::sin(th);
  return c * v + s * cross(axis, v) + (1.0 - c) * dot(axis, v) * axis;
}

struct Fields {
  Vec3 e;
  Vec3 b;
};

}  // namespace

double max_stable_dt(const Grid& g) { return 0.5 * g.spacing() / g.c(); }

void validate(const TrajectoryConfig& cfg, const Grid& g) {
  if (!(cfg.dt > 0.0) || !(cfg.dt < max_stable_dt(g)))
    throw StabilityViolation("time step " + std::to_string(cfg.dt) + " is outside (0, 0.5 dx / c = " +
                             std::to_string(max_stable_dt(g)) + ")");
  if (cfg.n_steps < 0) throw InvalidArgument("n_steps must be >= 0");
  if (cfg.output_stride < 1) throw InvalidArgument("output_stride must be >= 1");
}

struct Evolver::Impl {
  Grid grid;
  WaveVectors wv;
  ParticleSet particles;
  double time;
  VectorSpectrum a;
  VectorSpectrum e;
  std::vector<double> axis;      // true wavenumber per index
  std::vector<double> gauss;     // exp(-k^2 sigma^2 / 2) per half-spectrum mode
  std::vector<double> kd2;       // |k'|^2 per half-spectrum mode
  std::vector<double> omega;     // c |k'|
  ScalarSpectrum pinned_rho;     // density of the pinned nucleus, constant
  double cached_tau = 0.0;
  std::vector<double> cos_tau;
  std::vector<double> sin_tau;

  Impl(const SystemState& s)
      : grid(s.grid()),
        wv(grid),
        particles(s.particles),
        time(s.time),
        a(forward(s.field.a_perp)),
        e(forward(s.field.e_perp)),
        pinned_rho(grid) {
    require_same_grid(grid, s.field.e_perp.grid());
    const int n = grid.n();
    axis.resize(n);
    for (int i = 0; i < n; ++i) axis[i] = wv.k(i, 0, 0).x;
    const double sig = particles.sigma();
    gauss.resize(a.comp[0].size());
    kd2.resize(a.comp[0].size());
    omega.resize(a.comp[0].size());
    for_each([&](int ix, int iy, int iz, std::size_t m) {
      gauss[m] = std::exp(-0.5 * norm2(wv.k(ix, iy, iz)) * sig * sig);
      kd2[m] = norm2(wv.kd(ix, iy, iz));
      omega[m] = grid.c() * std::sqrt(kd2[m]);
    });
    if (particles.immobile_nucleus()) {
      std::vector<Vec3> w(particles.size());
      w[0] = {particles[0].charge, 0.0, 0.0};
      pinned_rho = deposit(w).comp[0];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    const int n = grid.n();
    const int nh = n / 2 + 1;
    std::size_t m = 0;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < nh; ++iz, ++m) f(ix, iy, iz, m);
  }

  // e^{-i k . x} factors per axis (conjugated for sampling).
  std::array<std::vector<Complex>, 3> phases(const Vec3& x) const {
    std::array<std::vector<Complex>, 3> ph;
    const int n = grid.n();
    for (int c = 0; c < 3; ++c) {
      const int len = c == 2 ? n / 2 + 1 : n;
      ph[c].resize(len);
      for (int i = 0; i < len; ++i) ph[c][i] = std::polar(1.0, -axis[i] * x[c]);
    }
    return ph;
  }

  // Spectrum of sum_a w_a delta_sigma(x - x_a) with per-particle vector weights.
  VectorSpectrum deposit(const std::vector<Vec3>& weights) const {
    VectorSpectrum out(grid);
    const double inv_cell = 1.0 / grid.cell_volume();
    for (std::size_t p = 0; p < particles.size(); ++p) {
      if (weights[p] == Vec3{}) continue;
      const auto ph = phases(particles[p].position);
      const Vec3 w = weights[p] * inv_cell;
      for_each([&](int ix, int iy, int iz, std::size_t m) {
        const Complex f = ph[0][ix] * ph[1][iy] * ph[2][iz] * gauss[m];
        out.comp[0][m] += w.x * f;
        out.comp[1][m] += w.y * f;
        out.comp[2][m] += w.z * f;
      });
    }
    return out;
  }

  ScalarSpectrum density() const {
    std::vector<Vec3> w(particles.size());
    for (std::size_t p = 0; p < particles.size(); ++p)
      if (!particles.is_pinned(p)) w[p] = {particles[p].charge, 0.0, 0.0};
    auto rho = deposit(w).comp[0];
    if (particles.immobile_nucleus())
      for (std::size_t m = 0; m < rho.size(); ++m) rho[m] += pinned_rho[m];
    return rho;
  }

  VectorSpectrum current() const {
    std::vector<Vec3> w(particles.size());
    for (std::size_t p = 0; p < particles.size(); ++p) w[p] = particles[p].charge * particles[p].velocity;
    return deposit(w);
  }

  // Gaussian-averaged E (transverse + longitudinal) and B at x.
  Fields sample(const Vec3& x, const ScalarSpectrum& rho) const {
    const auto ph = phases(x);
    const double eps0 = grid.eps0();
    const int n = grid.n();
    Vec3 es;
    Vec3 bs;
    for_each([&](int ix, int iy, int iz, std::size_t m) {
      const Complex f = std::conj(ph[0][ix] * ph[1][iy] * ph[2][iz]) * (gauss[m] * wv.weight(iz));
      const Vec3 kd = wv.kd(ix, iy, iz);
      const double k2 = kd2[m];
      const Complex ax = a.comp[0][m], ay = a.comp[1][m], az = a.comp[2][m];
      const Complex I(0.0, 1.0);
      // B = i k' x A
      const Complex bx = I * (kd.y * az - kd.z * ay);
      const Complex by = I * (kd.z * ax - kd.x * az);
      const Complex bz = I * (kd.x * ay - kd.y * ax);
      Complex ex = e.comp[0][m], ey = e.comp[1][m], ez = e.comp[2][m];
      if (k2 > 0.0) {
        const Complex phi = rho[m] / (eps0 * k2);
        ex -= I * kd.x * phi;
        ey -= I * kd.y * phi;
        ez -= I * kd.z * phi;
      }
      es.x += (ex * f).real();
      es.y += (ey * f).real();
      es.z += (ez * f).real();
      bs.x += (bx * f).real();
      bs.y += (by * f).real();
      bs.z += (bz * f).real();
    });
    const double norm_factor = 1.0 / (static_cast<double>(n) * n * n);
    return {es * norm_factor, bs * norm_factor};
  }

  void field_half(double tau) {
    const auto j = current();
    const double mu0 = grid.mu0();
    if (tau != cached_tau || cos_tau.empty()) {
      cos_tau.resize(kd2.size());
      sin_tau.resize(kd2.size());
      for (std::size_t m = 0; m < kd2.size(); ++m) {
        const double th = omega[m] * tau;
        cos_tau[m] = std::cos(th);
        sin_tau[m] = std::sin(th);
      }
      cached_tau = tau;
    }
    for_each([&](int ix, int iy, int iz, std::size_t m) {
      const double k2 = kd2[m];
      if (k2 == 0.0) {
        for (int d = 0; d < 3; ++d) a.comp[d][m] -= e.comp[d][m] * tau;
        return;
      }
      const Vec3 kd = wv.kd(ix, iy, iz);
      // transverse current
      const double inv_k2 = 1.0 / k2;
      const Complex kj = (kd.x * j.comp[0][m] + kd.y * j.comp[1][m] + kd.z * j.comp[2][m]) * inv_k2;
      const double w = omega[m];
      const double cs = cos_tau[m];
      const double sn = sin_tau[m];
      for (int d = 0; d < 3; ++d) {
        const Complex ap = (mu0 * inv_k2) * (j.comp[d][m] - kd[d] * kj);
        const Complex a0 = a.comp[d][m] - ap;
        const Complex e0 = e.comp[d][m];
        a.comp[d][m] = ap + a0 * cs - e0 * (sn / w);
        e.comp[d][m] = e0 * cs + a0 * (w * sn);
      }
    });
  }

  void particle_step(double dt) {
    const std::size_t np = particles.size();
    std::vector<Vec3> x(np), v(np);
    for (std::size_t p = 0; p < np; ++p) {
      x[p] = particles[p].position;
      v[p] = particles[p].velocity;
    }
    const double half = 0.5 * dt;
    auto kick_rotate = [&](bool kick_first) {
      const auto rho = density();
      for (std::size_t p = 0; p < np; ++p) {
        if (particles.is_pinned(p)) continue;
        const auto f = sample(x[p], rho);
        const double qm = particles[p].charge / particles[p].mass;
        const Vec3 omega = -qm * f.b;
        if (kick_first) {
          v[p] += qm * half * f.e;
          v[p] = rotate(v[p], omega, half);
        } else {
          v[p] = rotate(v[p], omega, half);
          v[p] += qm * half * f.e;
        }
      }
    };
    kick_rotate(true);
    for (std::size_t p = 0; p < np; ++p)
      if (!particles.is_pinned(p)) x[p] += dt * v[p];
    // positions change before the second evaluation; velocities are carried over
    particles = particles.with_kinematics(x, v);
    kick_rotate(false);
    particles = particles.with_kinematics(x, v);
  }

  double parseval(const VectorSpectrum& s) const {
    double acc = 0.0;
    for_each([&](int, int, int iz, std::size_t m) {
      acc += wv.weight(iz) * (std::norm(s.comp[0][m]) + std::norm(s.comp[1][m]) + std::norm(s.comp[2][m]));
    });
    const double n3 = static_cast<double>(grid.size());
    return acc * grid.cell_volume() / n3;
  }
};

Evolver::Evolver(const SystemState& s0) : impl_(std::make_unique<Impl>(s0)) {}
Evolver::~Evolver() = default;
Evolver::Evolver(Evolver&&) noexcept = default;
Evolver& Evolver::operator=(Evolver&&) noexcept = default;

void Evolver::advance(double dt) {
  validate(TrajectoryConfig{dt, 1, 1}, impl_->grid);
  impl_->field_half(0.5 * dt);
  impl_->particle_step(dt);
  impl_->field_half(0.5 * dt);
  impl_->time += dt;
}

double Evolver::time() const { return impl_->time; }

const ParticleSet& Evolver::particles() const { return impl_->particles; }

SystemState Evolver::state() const {
  return SystemState{impl_->particles, FieldState{inverse(impl_->a), inverse(impl_->e)}, impl_->time};
}

EnergySample Evolver::energy() const {
  const auto& im = *impl_;
  const Grid& g = im.grid;
  const auto rho = im.density();
  VectorSpectrum e_full = im.e;
  VectorSpectrum b(g);
  const Complex I(0.0, 1.0);
  im.for_each([&](int ix, int iy, int iz, std::size_t m) {
    const Vec3 kd = im.wv.kd(ix, iy, iz);
    const double kd2 = norm2(kd);
    const Complex ax = im.a.comp[0][m], ay = im.a.comp[1][m], az = im.a.comp[2][m];
    b.comp[0][m] = I * (kd.y * az - kd.z * ay);
    b.comp[1][m] = I * (kd.z * ax - kd.x * az);
    b.comp[2][m] = I * (kd.x * ay - kd.y * ax);
    if (kd2 > 0.0) {
      const Complex phi = rho[m] / (g.eps0() * kd2);
      for (int d = 0; d < 3; ++d) e_full.comp[d][m] -= I * kd[d] * phi;
    }
  });
  EnergySample out;
  out.time = im.time;
  out.kinetic = kinetic_energy(im.particles);
  const double b2 = 0.5 / g.mu0() * im.parseval(b);
  out.field = 0.5 * g.eps0() * im.parseval(e_full) + b2;
  out.radiation = 0.5 * g.eps0() * im.parseval(im.e) + b2;
  out.total = out.kinetic + out.field;
  return out;
}

EnergySample energy_sample(const SystemState& s) { return Evolver(s).energy(); }

SystemState step(const SystemState& s, double dt) {
  Evolver ev(s);
  ev.advance(dt);
  return ev.state();
}

namespace {

template <typename Emit>
void drive(const SystemState& s0, const TrajectoryConfig& cfg, Emit&& emit) {
  validate(cfg, s0.grid());
  Evolver ev(s0);
  for (int k = 1; k <= cfg.n_steps; ++k) {
    ev.advance(cfg.dt);
    if (k % cfg.output_stride == 0 || k == cfg.n_steps) emit(ev);
  }
}

}  // namespace

std::vector<SystemState> run(const SystemState& s0, const TrajectoryConfig& cfg) {
  std::vector<SystemState> out{s0};
  drive(s0, cfg, [&](const Evolver& ev) { out.push_back(ev.state()); });
  return out;
}

std::vector<EnergySample> run_energy(const SystemState& s0, const TrajectoryConfig& cfg) {
  std::vector<EnergySample> out{energy_sample(s0)};
  drive(s0, cfg, [&](const Evolver& ev) { out.push_back(ev.energy()); });
  return out;
}

}  // namespace gaugelab
