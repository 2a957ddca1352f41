#include "galilei/group_kernel.hpp"

#include <cmath>

namespace galilei {

namespace {

constexpr double kUnimodularTolerance = 1e-12;

CocycleValue make_cocycle(Complex m, Complex theta_over_m)
{
  const Complex value = std::exp(Complex(0.0, 1.0) * m * theta_over_m);
  return {value, std::abs(std::abs(value) - 1.0) <= kUnimodularTolerance};
}

} // namespace

double delta_phase(double m, const Event& e, const Vec3& v)
{
  return m * (0.5 * v.squaredNorm() * e.t - v.dot(e.x));
}

Complex delta_phase(Complex m, const Event& e, const Vec3& v)
{
  return m * (0.5 * v.squaredNorm() * e.t - v.dot(e.x));
}

Complex galilei_phase(Complex m, const Event& e, const GalileiElement& g)
{
  // g = boost(v) · translation(a - b v) · time_translation(b); only the boost
  // carries a phase, evaluated where the boost is applied.
  const Event shifted = act(GalileiElement::translation(g.a - g.b * g.v), act(GalileiElement::time_translation(g.b), e));
  return delta_phase(m, shifted, -g.v);
}

CocycleValue cocycle(const GalileiElement& g, const GalileiElement& h, Complex m)
{
  const ExtendedGalileiElement product = compose(section(g), section(h));
  const ExtendedGalileiElement lifted = section(compose(g, h));
  return make_cocycle(m, product.bm - lifted.bm);
}

CocycleValue cocycle_at(const GalileiElement& g, const GalileiElement& h, Complex m, const Event& e)
{
  const Complex theta = galilei_phase(m, act(h, e), g) + galilei_phase(m, e, h) - galilei_phase(m, e, compose(g, h));
  return make_cocycle(1.0, theta);
}

} // namespace galilei
