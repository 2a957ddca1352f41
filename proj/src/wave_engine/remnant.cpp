#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace galilei {

RemnantReport remnant_phase_check(const Vec3& v, double c, const Event& e, double m)
{
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("speed of light must be positive");
  const double v2 = v.squaredNorm();
  if (!(v2 < c * c))
    throw std::invalid_argument("boost speed must be below c");

  const double beta2 = v2 / (c * c);
  const double gamma = 1.0 / std::sqrt(1.0 - beta2);
  const double gm1 = gamma * gamma * beta2 / (gamma + 1.0); // γ - 1
  const double vx = v.dot(e.x);

  RemnantReport r;
  r.time_shift = gm1 * e.t - gamma * vx / (c * c);
  // c² (γ - 1) = v² γ² / (γ + 1)
  r.exact_phase = m * (v2 * gamma * gamma / (gamma + 1.0) * e.t - gamma * vx);
  r.delta_phase = delta_phase(m, e, v);
  // c²(γ-1) - v²/2 = v² (2γ + 1)(γ - 1) / (2(γ + 1))
  r.residual = m * (v2 * (2.0 * gamma + 1.0) * gm1 / (2.0 * (gamma + 1.0)) * e.t - gm1 * vx);
  if (r.delta_phase != 0.0)
    r.relative = std::abs(r.residual) / std::abs(r.delta_phase);
  else
    r.relative = r.residual == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return r;
}

} // namespace galilei
