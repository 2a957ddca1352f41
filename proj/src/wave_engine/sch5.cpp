#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

std::complex<double> s_derivative_factor(std::complex<double> mass) { return {mass.imag(), -mass.real()}; }

std::complex<double> inverse_s_derivative_factor(std::complex<double> mass)
{
  return std::complex<double>(0.0, 1.0) / mass;
}

namespace {

enum class Form { FiveDimensional, Ordinary };

Sch5Report residual(const SuperposedState& state, const Potential& potential, double dt, double c, Form form)
{
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("time step must be positive");
  const SuperposedState mid = propagate(state, potential, dt, 1, c);
  const SuperposedState end = propagate(mid, potential, dt, 1, c);
  const Grid1D& grid = state.grid();
  const std::complex<double> i(0.0, 1.0);

  Sch5Report report;
  report.time = mid.time();
  double sum = 0.0;
  for (std::size_t k = 0; k < state.channel_count(); ++k) {
    const std::complex<double> m = state.channel(k).mass;
    const Field& psi = mid.channel(k).amplitudes;
    const Field lap = spectral::laplacian(grid, psi);
    const Field v = potential.sample(grid, mid.time(), m);

    std::complex<double> rest;
    std::complex<double> kinetic;
    if (form == Form::FiveDimensional) {
      rest = i * c * c * s_derivative_factor(m);
      kinetic = -inverse_s_derivative_factor(m) / (2.0 * i);
    } else {
      rest = m * c * c;
      kinetic = -1.0 / (2.0 * m);
    }

    Field r(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const std::complex<double> dpsi =
        (end.channel(k).amplitudes[j] - state.channel(k).amplitudes[j]) / (2.0 * dt);
      r[j] = i * dpsi - (rest * psi[j] + kinetic * lap[j] + v[j] * psi[j]);
    }
    const double rk = l2_norm(grid, r);
    report.channel_residuals.push_back(rk);
    sum += rk * rk;
  }
  report.residual = std::sqrt(sum);
  report.state_norm = l2_norm(mid);
  report.relative_residual = report.state_norm > 0.0 ? report.residual / report.state_norm : report.residual;
  return report;
}

} // namespace

Sch5Report reduce_sch5(const SuperposedState& state, const Potential& potential, double dt, double c,
                       double mass_floor)
{
  for (const auto& ch : state.channels())
    if (std::abs(ch.mass) < mass_floor)
      throw std::invalid_argument("mass channel below the floor; the inverse s derivative is undefined");
  return residual(state, potential, dt, c, Form::FiveDimensional);
}

Sch5Report schrodinger_residual(const SuperposedState& state, const Potential& potential, double dt, double c)
{
  return residual(state, potential, dt, c, Form::Ordinary);
}

} // namespace galilei
