#include "gaugelab/particles.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gaugelab/errors.hpp"

namespace gaugelab {

ParticleSet::ParticleSet(std::vector<Particle> particles, double sigma, bool immobile_nucleus)
    : particles_(std::move(particles)), sigma_(sigma), immobile_nucleus_(immobile_nucleus) {
  if (particles_.empty()) throw InvalidArgument("ParticleSet: no particles");
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) throw InvalidArgument("ParticleSet: sigma must be positive");
  double total = 0.0;
  double scale = 0.0;
  for (const auto& p : particles_) {
    if (!(p.mass > 0.0)) throw InvalidArgument("ParticleSet: masses must be positive");
    total += p.charge;
    scale += std::abs(p.charge);
  }
  if (std::abs(total) > 1e-12 * std::max(scale, 1.0)) throw NonNeutralSource("ParticleSet: total charge is not zero");
  if (immobile_nucleus_) {
    const auto& n = particles_[0];
    if (norm(n.position) != 0.0 || norm(n.velocity) != 0.0)
      throw InvalidArgument("ParticleSet: immobile nucleus must sit at rest at the origin");
  }
}

Vec3 ParticleSet::reference_point() const {
  if (immobile_nucleus_) return {};
  Vec3 acc;
  double m = 0.0;
  for (const auto& p : particles_) {
    acc += p.mass * p.position;
    m += p.mass;
  }
  return acc / m;
}

Vec3 ParticleSet::reference_velocity() const {
  if (immobile_nucleus_) return {};
  Vec3 acc;
  double m = 0.0;
  for (const auto& p : particles_) {
    acc += p.mass * p.velocity;
    m += p.mass;
  }
  return acc / m;
}

ParticleSet ParticleSet::with_kinematics(const std::vector<Vec3>& positions, const std::vector<Vec3>& velocities) const {
  if (positions.size() != size() || velocities.size() != size())
    throw InvalidArgument("ParticleSet::with_kinematics: size mismatch");
  auto ps = particles_;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ps[i].position = positions[i];
    ps[i].velocity = velocities[i];
  }
  return ParticleSet(std::move(ps), sigma_, immobile_nucleus_);
}

ParticleSet ParticleSet::with_sigma(double sigma) const { return ParticleSet(particles_, sigma, immobile_nucleus_); }

void require_compatible(const ParticleSet& p, const Grid& g) {
  if (p.sigma() < 3.0 * g.spacing() * (1.0 - 1e-12))
    throw SmearingTooNarrow("smearing width " + std::to_string(p.sigma()) + " is below 3 lattice spacings");
  const double limit = 0.25 * g.length() * (1.0 + 1e-12);
  for (const auto& q : p.particles())
    if (norm(q.position) > limit) throw OutOfTrustedRegion("particle outside |x| <= L/4");
}

ParticleSet read_particle_config(std::istream& in) {
  std::vector<Particle> particles;
  double sigma = -1.0;
  bool immobile = true;
  int declared_z = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& what) {
      throw FormatError("particle config line " + std::to_string(lineno) + ": " + what);
    };
    if (key == "sigma") {
      if (!(ls >> sigma)) fail("expected a value after 'sigma'");
    } else if (key == "Z") {
      if (!(ls >> declared_z)) fail("expected an integer after 'Z'");
    } else if (key == "immobile_nucleus") {
      int flag = 0;
      if (!(ls >> flag)) fail("expected 0 or 1 after 'immobile_nucleus'");
      immobile = flag != 0;
    } else if (key == "particle") {
      Particle p;
      if (!(ls >> p.charge >> p.mass >> p.position.x >> p.position.y >> p.position.z >> p.velocity.x >> p.velocity.y >>
            p.velocity.z))
        fail("particle needs q m x y z vx vy vz");
      particles.push_back(p);
    } else {
      fail("unknown directive '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (sigma <= 0.0) throw FormatError("particle config: missing or non-positive sigma");
  if (declared_z >= 0 && declared_z + 1 != static_cast<int>(particles.size()))
    throw FormatError("particle config: Z does not match the particle count");
  try {
    return ParticleSet(std::move(particles), sigma, immobile);
  } catch (const Error& e) {
    throw FormatError(std::string("particle config: ") + e.what());
  }
}

ParticleSet read_particle_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open particle config " + path.string());
  return read_particle_config(in);
}

void write_particle_config(std::ostream& out, const ParticleSet& p) {
  out << std::setprecision(17);
  out << "Z " << p.z() << "\n";
  out << "sigma " << p.sigma() << "\n";
  out << "immobile_nucleus " << (p.immobile_nucleus() ? 1 : 0) << "\n";
  for (const auto& q : p.particles()) {
    out << "particle " << q.charge << ' ' << q.mass << ' ' << q.position.x << ' ' << q.position.y << ' '
        << q.position.z << ' ' << q.velocity.x << ' ' << q.velocity.y << ' ' << q.velocity.z << "\n";
  }
}

}  // namespace gaugelab
