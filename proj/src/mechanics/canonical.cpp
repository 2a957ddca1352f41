#include "galilei/mechanics.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

PhaseState PhaseState::on_shell(const Vec3& q, const Vec3& p, double mass, double c, double t)
{
  PhaseState s{q, p, 0.0, mass, t};
  s.energy = s.shell_energy(c);
  return s;
}

double PhaseState::shell_energy(double c) const { return mass * c * c + p.squaredNorm() / (2.0 * mass); }

bool PhaseState::is_on_shell(double c, double rel_tol) const
{
  const double expected = shell_energy(c);
  const double scale = std::max(std::abs(energy), std::abs(expected));
  return std::abs(energy - expected) <= rel_tol * scale;
}

PhaseState f2_map(const PhaseState& s, const Vec3& v)
{
  PhaseState out = s;
  out.q = s.q - v * s.t;
  out.energy = s.energy - v.dot(s.p);
  return out;
}

PhaseState f3_map(const PhaseState& s, const Vec3& v)
{
  PhaseState out = s;
  out.p = s.p - s.mass * v;
  out.energy = s.energy + 0.5 * s.mass * v.squaredNorm();
  return out;
}

PhaseState composed_boost_map(const PhaseState& s, const Vec3& v)
{
  PhaseState out = s;
  out.q = s.q - v * s.t;
  out.p = s.p - s.mass * v;
  out.energy = s.energy - v.dot(s.p) + 0.5 * s.mass * v.squaredNorm();
  return out;
}

double decay_mass_ratio(double m0, double v, double c)
{
  if (!(c > 0.0))
    throw std::invalid_argument("decay_mass_ratio: c must be positive");
  if (!(v >= 0.0) || !(v < c))
    throw std::invalid_argument("decay_mass_ratio: recoil speed must satisfy 0 <= v < c");
  // m₀ v = k (x balance) and m u = m₀ u + k u / c (y balance in the moving
  // frame), so m = m₀ + k / c.
  return m0 * (1.0 + v / c);
}

} // namespace galilei
