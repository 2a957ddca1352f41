#include "galilei/group_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace galilei {

namespace {

using Wide = long double;

// The b_m law mixes products of O(10²) magnitude; accumulating in extended
// precision keeps the fuzzed group-law residuals at one rounding of the result.
Wide wide_dot(const Vec3& u, const Vec3& w)
{
  return static_cast<Wide>(u[0]) * w[0] + static_cast<Wide>(u[1]) * w[1] + static_cast<Wide>(u[2]) * w[2];
}

Vec3 shift_plus_scaled(const Vec3& a, const Vec3& a2, double b2, const Vec3& v)
{
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = static_cast<double>(static_cast<Wide>(a[i]) + a2[i] + static_cast<Wide>(b2) * v[i]);
  return out;
}

double max_abs(const Vec3& u) { return u.cwiseAbs().maxCoeff(); }

} // namespace

bool operator==(const GalileiElement& lhs, const GalileiElement& rhs)
{
  return lhs.b == rhs.b && lhs.a == rhs.a && lhs.v == rhs.v;
}

bool operator==(const ExtendedGalileiElement& lhs, const ExtendedGalileiElement& rhs)
{
  return lhs.bm == rhs.bm && lhs.b == rhs.b && lhs.a == rhs.a && lhs.v == rhs.v;
}

double max_abs_diff(const GalileiElement& lhs, const GalileiElement& rhs)
{
  return std::max({std::abs(lhs.b - rhs.b), max_abs(lhs.a - rhs.a), max_abs(lhs.v - rhs.v)});
}

double max_abs_diff(const ExtendedGalileiElement& lhs, const ExtendedGalileiElement& rhs)
{
  return std::max(std::abs(lhs.bm - rhs.bm), max_abs_diff(erase(lhs), erase(rhs)));
}

double max_abs_diff(const Event& lhs, const Event& rhs)
{
  return std::max(std::abs(lhs.t - rhs.t), max_abs(lhs.x - rhs.x));
}

double max_abs_diff(const Event5& lhs, const Event5& rhs)
{
  return std::max(std::abs(lhs.s - rhs.s), max_abs_diff(lhs.projected(), rhs.projected()));
}

GalileiElement compose(const GalileiElement& g, const GalileiElement& h)
{
  return {g.b + h.b, shift_plus_scaled(g.a, h.a, h.b, g.v), g.v + h.v};
}

ExtendedGalileiElement compose(const ExtendedGalileiElement& g, const ExtendedGalileiElement& h)
{
  const Wide bm = static_cast<Wide>(g.bm) + h.bm + wide_dot(g.v, h.a) + 0.5L * wide_dot(g.v, g.v) * h.b;
  return {static_cast<double>(bm), g.b + h.b, shift_plus_scaled(g.a, h.a, h.b, g.v), g.v + h.v};
}

GalileiElement inverse(const GalileiElement& g)
{
  Vec3 a;
  for (int i = 0; i < 3; ++i)
    a[i] = static_cast<double>(-(static_cast<Wide>(g.a[i]) - static_cast<Wide>(g.b) * g.v[i]));
  return {-g.b, a, -g.v};
}

ExtendedGalileiElement inverse(const ExtendedGalileiElement& g)
{
  const Wide bm = -static_cast<Wide>(g.bm) + wide_dot(g.v, g.a) - 0.5L * wide_dot(g.v, g.v) * g.b;
  const GalileiElement plain = inverse(erase(g));
  return {static_cast<double>(bm), plain.b, plain.a, plain.v};
}

GalileiElement erase(const ExtendedGalileiElement& g) { return {g.b, g.a, g.v}; }

ExtendedGalileiElement section(const GalileiElement& g)
{
  const Wide bm = wide_dot(g.v, g.a) - 0.5L * wide_dot(g.v, g.v) * g.b;
  return {static_cast<double>(bm), g.b, g.a, g.v};
}

Event act(const GalileiElement& g, const Event& e)
{
  Vec3 x;
  for (int i = 0; i < 3; ++i)
    x[i] = static_cast<double>(static_cast<Wide>(e.x[i]) + static_cast<Wide>(g.v[i]) * e.t + g.a[i]);
  return {x, e.t + g.b};
}

Event act(const ExtendedGalileiElement& g, const Event& e) { return act(erase(g), e); }

Event5 act(const ExtendedGalileiElement& g, const Event5& e)
{
  const Event moved = act(erase(g), e.projected());
  const Wide s = static_cast<Wide>(e.s) + g.bm + wide_dot(g.v, e.x) + 0.5L * wide_dot(g.v, g.v) * e.t;
  return {moved.x, moved.t, static_cast<double>(s)};
}

std::array<ExtendedGalileiElement, 4> bargmann_loop_elements(const Vec3& a, const Vec3& v)
{
  return {ExtendedGalileiElement::translation(a), ExtendedGalileiElement::boost(v),
          ExtendedGalileiElement::translation(-a), ExtendedGalileiElement::boost(-v)};
}

ExtendedGalileiElement bargmann_loop(const Vec3& a, const Vec3& v)
{
  const auto [g1, g2, g3, g4] = bargmann_loop_elements(a, v);
  return compose(compose(compose(g4, g3), g2), g1);
}

} // namespace galilei
