#include "galilei/group_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

Event AffineMap::apply(const Event& e) const
{
  Vec4 p;
  p << e.x, e.t;
  const Vec4 q = linear * p + shift;
  return {q.head<3>(), q[3]};
}

AffineMap AffineMap::then(const AffineMap& next) const
{
  return {next.linear * linear, next.linear * shift + next.shift};
}

AffineMap lorentz_boost(const Vec3& v, double c)
{
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("lorentz_boost: c must be positive and finite");
  const double beta2 = v.squaredNorm() / (c * c);
  if (!(beta2 < 1.0))
    throw std::invalid_argument("lorentz_boost: |v| must be below c");
  const double gamma = 1.0 / std::sqrt(1.0 - beta2);
  // (γ - 1) n nᵀ = γ² / (c² (γ + 1)) v vᵀ, which stays accurate as v → 0.
  const double k = gamma * gamma / (c * c * (gamma + 1.0));

  AffineMap map;
  map.linear.topLeftCorner<3, 3>() = Eigen::Matrix3d::Identity() + k * v * v.transpose();
  map.linear.topRightCorner<3, 1>() = gamma * v;
  map.linear.bottomLeftCorner<1, 3>() = gamma * v.transpose() / (c * c);
  map.linear(3, 3) = gamma;
  return map;
}

AffineMap spatial_translation(const Vec3& a)
{
  AffineMap map;
  map.shift.head<3>() = a;
  return map;
}

double LorentzLoopResult::residual(double c) const { return std::hypot(residual_x, c * residual_t); }

LorentzLoopResult lorentz_loop(const Vec3& a, const Vec3& v, double c)
{
  // Operators act right to left; exp(i a·P) translates events by -a and
  // exp(i v·K) boosts them by -v.
  const AffineMap loop = spatial_translation(-a)
                             .then(lorentz_boost(-v, c))
                             .then(spatial_translation(a))
                             .then(lorentz_boost(v, c));

  LorentzLoopResult out;
  out.exact = loop;
  out.exact_dx = loop.shift.head<3>();
  out.exact_dt = loop.shift[3];
  const double va = v.dot(a);
  out.predicted_dx = va * v / (2.0 * c * c);
  out.predicted_dt = va / (c * c);
  out.residual_x = (out.exact_dx - out.predicted_dx).norm();
  out.residual_t = std::abs(out.exact_dt - out.predicted_dt);
  out.linear_deviation = (loop.linear - Mat4::Identity()).cwiseAbs().maxCoeff();
  return out;
}

} // namespace galilei
