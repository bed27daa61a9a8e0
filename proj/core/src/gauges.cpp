#include "gaugelab/gauges.hpp"

#include "gaugelab/errors.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"

namespace gaugelab {

std::string to_string(GaugeLabel label) {
  switch (label) {
    case GaugeLabel::coulomb:
      return "coulomb";
    case GaugeLabel::poincare:
      return "poincare";
    case GaugeLabel::transformed:
      return "transformed";
  }
  return "unknown";
}

Potentials coulomb_potentials(const VectorField& e, const VectorField& a_perp, const ParticleSet& p, double tol) {
  const Grid& g = e.grid();
  require_same_grid(g, a_perp.grid());
  if (!is_transverse(a_perp, tol)) throw NonTransverseInput("coulomb_potentials: vector potential is not transverse");
  auto phi = poisson_solve(charge_density(p, g), g.eps0());
  return Potentials{std::move(phi), a_perp, -transverse_part(e), GaugeLabel::coulomb};
}

Potentials apply_gauge_transform(const Potentials& pot, const GaugeFunction& chi) {
  require_same_grid(pot.phi.grid(), chi.chi.grid());
  require_same_grid(pot.phi.grid(), chi.chi_dot.grid());
  return Potentials{pot.phi + chi.chi_dot, pot.a - gradient(chi.chi), pot.a_dot - gradient(chi.chi_dot),
                    GaugeLabel::transformed};
}

EBFields fields_from_potentials(const Potentials& pot) {
  return EBFields{-pot.a_dot - gradient(pot.phi), curl(pot.a)};
}

}  // namespace gaugelab
