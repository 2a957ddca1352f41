#include "galilei/wave/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

void require_finite(double value, const char* what)
{
  if (!std::isfinite(value))
    throw std::invalid_argument(what);
}

} // namespace

Potential Potential::zero() { return {}; }

Potential Potential::linear(double g, double x0, double u)
{
  require_finite(g, "potential strength must be finite");
  require_finite(x0, "potential centre must be finite");
  require_finite(u, "potential drift must be finite");
  Potential p;
  p.kind_ = g == 0.0 ? Kind::Zero : Kind::Linear;
  p.strength_ = g;
  p.x0_ = x0;
  p.u_ = u;
  return p;
}

Potential Potential::harmonic(double k, double x0, double u)
{
  require_finite(k, "potential strength must be finite");
  require_finite(x0, "potential centre must be finite");
  require_finite(u, "potential drift must be finite");
  Potential p;
  p.kind_ = k == 0.0 ? Kind::Zero : Kind::Harmonic;
  p.strength_ = k;
  p.x0_ = x0;
  p.u_ = u;
  return p;
}

Potential Potential::sampled(std::vector<double> values)
{
  for (double v : values)
    require_finite(v, "potential samples must be finite");
  Potential p;
  p.kind_ = Kind::Sampled;
  p.values_ = std::move(values);
  return p;
}

Field Potential::sample(const Grid1D& grid, double t, std::complex<double> mass) const
{
  Field out(grid.size(), 0.0);
  switch (kind_) {
  case Kind::Zero:
    break;
  case Kind::Linear:
    for (std::size_t j = 0; j < grid.size(); ++j)
      out[j] = -mass * strength_ * (grid.x(j) - x0_ - u_ * t);
    break;
  case Kind::Harmonic:
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double y = grid.x(j) - x0_ - u_ * t;
      out[j] = 0.5 * strength_ * y * y;
    }
    break;
  case Kind::Sampled:
    if (values_.size() != grid.size())
      throw std::invalid_argument("sampled potential does not match the grid");
    for (std::size_t j = 0; j < grid.size(); ++j)
      out[j] = values_[j];
    break;
  }
  for (const auto& z : out)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("potential evaluates to a non-finite value");
  return out;
}

Potential Potential::transformed(const GalileiElement& g) const
{
  if (g.a.tail<2>().squaredNorm() != 0.0 || g.v.tail<2>().squaredNorm() != 0.0)
    throw std::invalid_argument("potentials are one dimensional; element must act along x");
  if (kind_ == Kind::Zero)
    return *this;
  if (kind_ == Kind::Sampled) {
    if (!(g == GalileiElement::identity()))
      throw std::invalid_argument("sampled potentials cannot be transformed");
    return *this;
  }
  // x - x0 - u t at the pre-image of (x', t') is x' - x0' - u' t'.
  Potential p = *this;
  p.u_ = u_ + g.v.x();
  p.x0_ = x0_ + g.a.x() - p.u_ * g.b;
  return p;
}

} // namespace galilei
