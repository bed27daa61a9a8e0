#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "gaugelab/errors.hpp"
#include "gaugelab/fft.hpp"
#include "gaugelab/spectral_ops.hpp"

using namespace gaugelab;

TEST(ParticleConfig, RoundTrip) {
  const Grid g = fixtures::small_grid();
  const auto p = fixtures::three_particle(g);
  std::stringstream buf;
  write_particle_config(buf, p);
  const auto back = read_particle_config(buf);
  ASSERT_EQ(back.size(), p.size());
  EXPECT_EQ(back.sigma(), p.sigma());
  EXPECT_EQ(back.immobile_nucleus(), p.immobile_nucleus());
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(back[i].charge, p[i].charge);
    EXPECT_EQ(back[i].mass, p[i].mass);
    EXPECT_EQ(back[i].position, p[i].position);
    EXPECT_EQ(back[i].velocity, p[i].velocity);
  }
}

TEST(ParticleConfig, CommentsAndFlags) {
  std::istringstream in(
      "# hydrogen\n"
      "sigma 0.1   # width\n"
      "immobile_nucleus 0\n"
      "Z 1\n"
      "particle 1 2 0.01 0 0 0 0 0\n"
      "\n"
      "particle -1 1 -0.02 0 0 0 1 0\n");
  const auto p = read_particle_config(in);
  EXPECT_EQ(p.z(), 1);
  EXPECT_FALSE(p.immobile_nucleus());
  EXPECT_EQ(p.sigma(), 0.1);
  EXPECT_EQ(p[1].velocity.y, 1.0);
}

TEST(ParticleConfig, Errors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_particle_config(in);
  };
  EXPECT_THROW(parse("particle 1 1 0 0 0 0 0 0\nparticle -1 1 0.1 0 0 0 0 0\n"), FormatError);
  EXPECT_THROW(parse("sigma 0.1\nZ 2\nparticle 1 1 0 0 0 0 0 0\nparticle -1 1 0.1 0 0 0 0 0\n"), FormatError);
  EXPECT_THROW(parse("sigma 0.1\nparticle 1 1 0 0 0\n"), FormatError);
  EXPECT_THROW(parse("sigma 0.1\nwidth 3\n"), FormatError);
  EXPECT_THROW(parse("sigma 0.1\nparticle 1 1 0 0 0 0 0 0\nparticle -0.5 1 0.1 0 0 0 0 0\n"), FormatError);
  EXPECT_THROW(read_particle_config(std::filesystem::path("/nonexistent/atom.txt")), FormatError);
}

TEST(RandomFields, ScalarProperties) {
  const Grid g = fixtures::small_grid(16);
  const auto f = random_scalar_field(g, 5, 2, 0.7);
  EXPECT_NEAR(f.mean(), 0.0, 1e-14);
  EXPECT_NEAR(l2_norm(f) / std::sqrt(g.volume()), 0.7, 1e-12);
  EXPECT_EQ(f.values(), random_scalar_field(g, 5, 2, 0.7).values());
  EXPECT_NE(f.values(), random_scalar_field(g, 6, 2, 0.7).values());

  const auto spec = forward(f);
  const int n = g.n();
  double outside = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n / 2 + 1; ++iz) {
        const int mx = g.signed_offset(ix), my = g.signed_offset(iy);
        if (std::abs(mx) > 2 || std::abs(my) > 2 || iz > 2) outside += std::abs(spec[spec.index(ix, iy, iz)]);
      }
  EXPECT_LT(outside, 1e-10);
}

TEST(RandomFields, TransverseAndGauge) {
  const Grid g = fixtures::small_grid(16);
  const auto v = random_transverse_field(g, 3, 3, 2.0);
  EXPECT_TRUE(is_transverse(v, 1e-12));
  EXPECT_NEAR(l2_norm(v) / std::sqrt(g.volume()), 2.0, 1e-12);
  const auto chi = random_gauge_function(g, 3, 3);
  EXPECT_GT(relative_l2(chi.chi, chi.chi_dot), 0.1);
}

TEST(RandomFields, Atom) {
  const Grid g = fixtures::small_grid();
  const auto p = random_atom(4, 0.1, 0.05, 0.2, 0.5, 17);
  EXPECT_EQ(p.z(), 4);
  EXPECT_TRUE(p.immobile_nucleus());
  EXPECT_EQ(p[0].charge, 4.0);
  EXPECT_EQ(p[0].mass, 1836.0 * 4);
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_EQ(p[i].charge, -1.0);
    EXPECT_GE(norm(p[i].position), 0.05 - 1e-12);
    EXPECT_LE(norm(p[i].position), 0.2 + 1e-12);
    EXPECT_LE(norm(p[i].velocity), 0.5 + 1e-12);
  }
  EXPECT_EQ(random_atom(4, 0.1, 0.05, 0.2, 0.5, 17)[3].position, p[3].position);
}
