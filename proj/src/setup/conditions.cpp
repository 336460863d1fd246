#include "vlab/setup/conditions.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/spectral/operators.hpp"
#include "vlab/virial/functional.hpp"
#include "vlab/virial/riccati.hpp"

namespace vlab::setup {

ConditionsReport check_blowup_conditions(const spectral::ScalarField& u0, const spectral::ScalarField& b,
                                         const WeightSpec& ws, double s, double frakC, double m_star) {
  if (!(frakC > 0.0) || !std::isfinite(frakC)) throw std::invalid_argument("conditions.frakC must be > 0");
  if (!(m_star > 0.0) || !std::isfinite(m_star)) throw std::invalid_argument("conditions.m_star must be > 0");
  if (!(s >= 0.0)) throw std::invalid_argument("Sobolev index must be >= 0");
  if (!(u0.grid() == b.grid())) throw std::invalid_argument("u0 and b must share a grid");

  ConditionsReport r;
  r.s = s;
  r.frakC = frakC;
  r.m_star = m_star;
  r.I0 = virial::virial_I(spectral::gradient(u0), b, ws);
  r.u0_sobolev = spectral::sobolev_norm(u0, s);
  const double p = r.u0_sobolev <= 1.0 ? r.u0_sobolev : r.u0_sobolev * r.u0_sobolev;
  r.c1 = virial::riccati_c1(u0.grid().dimension(), ws.kappa);
  r.c2 = frakC * p;
  r.cond1_holds = r.I0 > 0.0;
  r.cond2_holds = r.I0 * r.I0 >= r.c2;
  r.positivity_holds = r.I0 * std::sqrt(r.c1) - std::sqrt(r.c2) > 0.0;
  return r;
}

}  // namespace vlab::setup
