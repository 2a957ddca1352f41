#include "galilei/wave/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace galilei {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

Grid1D::Grid1D(std::size_t n, double x_min, double x_max) : n_(n), x_min_(x_min), x_max_(x_max)
{
  if (n < 16 || !is_power_of_two(n))
    throw std::invalid_argument("grid size must be a power of two and at least 16");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    throw std::invalid_argument("grid requires finite x_min < x_max");

  dx_ = (x_max - x_min) / static_cast<double>(n);
  x_.resize(n);
  k_.resize(n);
  const double dk = 2.0 * std::numbers::pi / (x_max - x_min);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t j = 0; j < n; ++j) {
    x_[j] = x_min + static_cast<double>(j) * dx_;
    auto idx = static_cast<std::ptrdiff_t>(j);
    if (idx >= half)
      idx -= static_cast<std::ptrdiff_t>(n);
    k_[j] = dk * static_cast<double>(idx);
  }
}

double Grid1D::dk() const { return 2.0 * std::numbers::pi / length(); }

std::complex<double> inner_product(const Grid1D& grid, const Field& lhs, const Field& rhs)
{
  if (lhs.size() != grid.size() || rhs.size() != grid.size())
    throw std::invalid_argument("field size does not match grid");
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < lhs.size(); ++j)
    sum += std::conj(lhs[j]) * rhs[j];
  return sum * grid.dx();
}

double l2_norm(const Grid1D& grid, const Field& f)
{
  if (f.size() != grid.size())
    throw std::invalid_argument("field size does not match grid");
  double sum = 0.0;
  for (const auto& z : f)
    sum += std::norm(z);
  return std::sqrt(sum * grid.dx());
}

double l2_distance(const Grid1D& grid, const Field& lhs, const Field& rhs)
{
  if (lhs.size() != grid.size() || rhs.size() != grid.size())
    throw std::invalid_argument("field size does not match grid");
  double sum = 0.0;
  for (std::size_t j = 0; j < lhs.size(); ++j)
    sum += std::norm(lhs[j] - rhs[j]);
  return std::sqrt(sum * grid.dx());
}

Field gaussian_packet(const Grid1D& grid, double x0, double sigma, double p0)
{
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("packet width must be positive");
  const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  Field f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double y = grid.x(j) - x0;
    f[j] = norm * std::exp(std::complex<double>(-y * y / (4.0 * sigma * sigma), p0 * y));
  }
  return f;
}

} // namespace galilei
