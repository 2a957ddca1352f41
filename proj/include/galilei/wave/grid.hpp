#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace galilei {

using Field = std::vector<std::complex<double>>;

/// Uniform periodic grid x_j = x_min + j dx, j = 0..n-1, dx = (x_max - x_min)/n,
/// with the discrete-Fourier conjugate lattice k_j = 2π/L · (j or j - n).
class Grid1D
{
public:
  /// Throws std::invalid_argument unless n ≥ 16 is a power of two and
  /// x_max > x_min (both finite).
  Grid1D(std::size_t n, double x_min, double x_max);

  std::size_t size() const { return n_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double length() const { return x_max_ - x_min_; }
  double dx() const { return dx_; }
  double dk() const;

  double x(std::size_t j) const { return x_[j]; }
  double k(std::size_t j) const { return k_[j]; }
  const std::vector<double>& positions() const { return x_; }
  const std::vector<double>& wavenumbers() const { return k_; }

  bool operator==(const Grid1D& other) const
  {
    return n_ == other.n_ && x_min_ == other.x_min_ && x_max_ == other.x_max_;
  }

private:
  std::size_t n_;
  double x_min_;
  double x_max_;
  double dx_;
  std::vector<double> x_;
  std::vector<double> k_;
};

// Discrete L² quantities, Σ ... dx.
std::complex<double> inner_product(const Grid1D& grid, const Field& lhs, const Field& rhs);
double l2_norm(const Grid1D& grid, const Field& f);
double l2_distance(const Grid1D& grid, const Field& lhs, const Field& rhs);

/// Normalized Gaussian (2πσ²)^(-1/4) exp(-(x-x0)²/4σ² + i p0 (x-x0)); σ is the
/// position standard deviation of |ψ|².
Field gaussian_packet(const Grid1D& grid, double x0, double sigma, double p0);

} // namespace galilei
