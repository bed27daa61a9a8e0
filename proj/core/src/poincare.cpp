#include "gaugelab/poincare.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "gaugelab/errors.hpp"

namespace gaugelab {

namespace {

void require_trusted(const Grid& g, const Vec3& x, const PoincareOptions& opts) {
  if (norm(x) > opts.trusted_fraction * g.length() * (1.0 + 1e-12))
    throw OutOfTrustedRegion("Poincare construction requested outside the trusted ball");
}

// int_0^1 s^power F(s x) ds
Vec3 line_integral(const VectorField& f, const Vec3& x, int power, const PoincareOptions& opts) {
  require_trusted(f.grid(), x, opts);
  Vec3 acc;
  for (int i = 0; i < opts.quad.order(); ++i) {
    const double s = opts.quad.nodes[i];
    const double w = opts.quad.weights[i] * (power == 1 ? s : 1.0);
    acc += w * sample_at(f, s * x, opts.interp);
  }
  return acc;
}

const std::array<Vec3, 3> kAxes = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

// 4th-order central difference of a vector function along each axis; row a is d/dx_a.
std::array<Vec3, 3> jacobian4(const std::function<Vec3(const Vec3&)>& f, const Vec3& x, double h) {
  std::array<Vec3, 3> d;
  for (int a = 0; a < 3; ++a) {
    const Vec3 e = h * kAxes[a];
    d[a] = (8.0 * (f(x + e) - f(x - e)) - (f(x + 2.0 * e) - f(x - 2.0 * e))) / (12.0 * h);
  }
  return d;
}

std::array<Vec3, 3> jacobian2(const std::function<Vec3(const Vec3&)>& f, const Vec3& x, double h) {
  std::array<Vec3, 3> d;
  for (int a = 0; a < 3; ++a) {
    const Vec3 e = h * kAxes[a];
    d[a] = (f(x + e) - f(x - e)) / (2.0 * h);
  }
  return d;
}

Vec3 curl_of(const std::array<Vec3, 3>& d) {
  return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

double div_of(const std::array<Vec3, 3>& d) { return d[0].x + d[1].y + d[2].z; }

double frobenius2(const std::array<Vec3, 3>& d) { return norm2(d[0]) + norm2(d[1]) + norm2(d[2]); }

double rms_ratio(double num2, double den2) { return den2 == 0.0 ? std::sqrt(num2) : std::sqrt(num2 / den2); }

}  // namespace

Vec3 poincare_auxiliary_u(const VectorField& e, const Vec3& x, const PoincareOptions& opts) {
  return line_integral(e, x, 0, opts);
}

Vec3 poincare_auxiliary_v(const VectorField& b, const Vec3& x, const PoincareOptions& opts) {
  return line_integral(b, x, 1, opts);
}

double poincare_scalar_potential(const VectorField& e, const Vec3& x, double phi0, const PoincareOptions& opts) {
  return phi0 - dot(x, poincare_auxiliary_u(e, x, opts));
}

Vec3 poincare_vector_potential(const VectorField& b, const Vec3& x, const PoincareOptions& opts) {
  return -cross(x, poincare_auxiliary_v(b, x, opts));
}

PoincarePotentials poincare_potentials(const VectorField& e, const VectorField& b, const Vec3& x, double phi0,
                                       const PoincareOptions& opts) {
  return {poincare_scalar_potential(e, x, phi0, opts), poincare_vector_potential(b, x, opts)};
}

std::vector<Vec3> ball_sites(const Grid& g, double radius, int stride) {
  if (stride < 1) throw InvalidArgument("ball_sites: stride must be >= 1");
  std::vector<Vec3> out;
  const int n = g.n();
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        if (g.signed_offset(ix) % stride || g.signed_offset(iy) % stride || g.signed_offset(iz) % stride) continue;
        const Vec3 x = g.position(ix, iy, iz);
        if (norm(x) <= radius) out.push_back(x);
      }
  return out;
}

std::vector<Vec3> random_ball_points(double radius, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Vec3> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    if (norm(x) <= radius) out.push_back(x);
  }
  return out;
}

ResidualReport verify_poincare_condition(const VectorField& b, const std::vector<Vec3>& points,
                                         const PoincareOptions& opts, double tol) {
  double worst = 0.0;
  double scale = 0.0;
  for (const auto& x : points) {
    const Vec3 a = poincare_vector_potential(b, x, opts);
    worst = std::max(worst, std::abs(dot(x, a)));
    scale = std::max(scale, norm(x) * norm(a));
  }
  ResidualReport r{"poincare_condition", worst, 0.0, 0.0, tol};
  r.rhs = scale;
  r.residual = scale == 0.0 ? worst : worst / scale;
  return r;
}

ResidualReport verify_b_reconstruction(const VectorField& b, const std::vector<Vec3>& points, double h,
                                       const PoincareOptions& opts, double tol) {
  const auto a_p = [&](const Vec3& y) { return poincare_vector_potential(b, y, opts); };
  double err2 = 0.0;
  double ref2 = 0.0;
  double rec2 = 0.0;
  for (const auto& x : points) {
    const Vec3 rec = curl_of(jacobian4(a_p, x, h));
    const Vec3 ref = sample_at(b, x, opts.interp);
    err2 += norm2(rec - ref);
    ref2 += norm2(ref);
    rec2 += norm2(rec);
  }
  ResidualReport r{"poincare_b_reconstruction", std::sqrt(rec2), std::sqrt(ref2), rms_ratio(err2, ref2), tol};
  return r;
}

ResidualReport verify_e_reconstruction(const VectorField& e_mid, const VectorField& b_prev, const VectorField& b_next,
                                       double dt, const std::vector<Vec3>& points, double h,
                                       const PoincareOptions& opts, double phi0, double tol) {
  const auto grad_phi = [&](const Vec3& y) {
    const auto f = [&](const Vec3& z) { return Vec3{poincare_scalar_potential(e_mid, z, phi0, opts), 0.0, 0.0}; };
    const auto d = jacobian4(f, y, h);
    return Vec3{d[0].x, d[1].x, d[2].x};
  };
  double err2 = 0.0;
  double ref2 = 0.0;
  double rec2 = 0.0;
  for (const auto& x : points) {
    const Vec3 a_dot =
        (poincare_vector_potential(b_next, x, opts) - poincare_vector_potential(b_prev, x, opts)) / (2.0 * dt);
    const Vec3 rec = -a_dot - grad_phi(x);
    const Vec3 ref = sample_at(e_mid, x, opts.interp);
    err2 += norm2(rec - ref);
    ref2 += norm2(ref);
    rec2 += norm2(rec);
  }
  return ResidualReport{"poincare_e_reconstruction", std::sqrt(rec2), std::sqrt(ref2), rms_ratio(err2, ref2), tol};
}

AuxiliaryReport verify_auxiliary_conditions(const VectorField& e0, const VectorField& e1, const VectorField& b0,
                                            const VectorField& b1, double dt, const std::vector<Vec3>& points,
                                            double h, const PoincareOptions& opts, double tol_fd) {
  const auto u_mid = [&](const Vec3& y) {
    return 0.5 * (poincare_auxiliary_u(e0, y, opts) + poincare_auxiliary_u(e1, y, opts));
  };
  const auto v_mid = [&](const Vec3& y) {
    return 0.5 * (poincare_auxiliary_v(b0, y, opts) + poincare_auxiliary_v(b1, y, opts));
  };
  double curl_res2 = 0.0, curl_u2 = 0.0, dv2 = 0.0, ju2 = 0.0;
  double div_res2 = 0.0, jv2 = 0.0, v2 = 0.0;
  for (const auto& x : points) {
    const auto du = jacobian2(u_mid, x, h);
    const auto dv = jacobian2(v_mid, x, h);
    const Vec3 curl_u = curl_of(du);
    const Vec3 v_dot = (poincare_auxiliary_v(b1, x, opts) - poincare_auxiliary_v(b0, x, opts)) / dt;
    curl_res2 += norm2(curl_u + v_dot);
    curl_u2 += norm2(curl_u);
    dv2 += norm2(v_dot);
    ju2 += frobenius2(du);
    const double d = div_of(dv);
    div_res2 += d * d;
    jv2 += frobenius2(dv);
    v2 += norm2(v_mid(x));
  }
  AuxiliaryReport out;
  out.curl_condition =
      ResidualReport{"poincare_aux_curl", std::sqrt(curl_u2), std::sqrt(dv2), rms_ratio(curl_res2, ju2), tol_fd};
  out.divergence_condition =
      ResidualReport{"poincare_aux_div", std::sqrt(div_res2), std::sqrt(v2), rms_ratio(div_res2, jv2), tol_fd};
  return out;
}

}  // namespace gaugelab
