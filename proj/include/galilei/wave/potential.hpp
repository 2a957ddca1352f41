#pragma once

#include "galilei/group_kernel.hpp"
#include "galilei/wave/grid.hpp"

#include <vector>

namespace galilei {

/// Scalar potential V(x, t). The closed forms are written around a centre
/// x0 + u t so that they stay in their family under boosts and translations.
class Potential
{
public:
  enum class Kind { Zero, Linear, Harmonic, Sampled };

  static Potential zero();
  /// V = -m g (x - x0 - u t), uniform gravity along x acting on mass m.
  static Potential linear(double g, double x0 = 0.0, double u = 0.0);
  /// V = (k/2) (x - x0 - u t)².
  static Potential harmonic(double k, double x0 = 0.0, double u = 0.0);
  /// Static values on a specific grid.
  static Potential sampled(std::vector<double> values);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  double strength() const { return strength_; }
  double center() const { return x0_; }
  double drift() const { return u_; }

  /// Throws std::invalid_argument for a sampled potential of the wrong size
  /// or any non-finite sample.
  Field sample(const Grid1D& grid, double t, std::complex<double> mass) const;

  /// V' with V'(g ▷ (x, t)) = V(x, t). Sampled potentials only accept the
  /// identity.
  Potential transformed(const GalileiElement& g) const;

private:
  Kind kind_ = Kind::Zero;
  double strength_ = 0.0;
  double x0_ = 0.0;
  double u_ = 0.0;
  std::vector<double> values_;
};

} // namespace galilei
