#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

SuperposedState to_accelerated_frame(const SuperposedState& state, const Potential& source_potential, double g,
                                     double kappa)
{
  if (!source_potential.is_zero())
    throw std::invalid_argument("accelerated frame map expects a free source state");
  if (!std::isfinite(g) || !std::isfinite(kappa))
    throw std::invalid_argument("acceleration parameters must be finite");
  for (const auto& ch : state.channels())
    if (ch.mass.imag() != 0.0)
      throw std::invalid_argument("accelerated frame map needs real masses");

  const Grid1D& grid = state.grid();
  const double t = state.time();
  const double shift = 0.5 * g * t * t;
  std::vector<Field> out;
  for (const auto& ch : state.channels()) {
    const double m = ch.mass.real();
    Field f = spectral::translate(grid, ch.amplitudes, shift);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double x = grid.x(j) - shift;
      f[j] *= std::polar(1.0, m * (g * t * x + kappa * g * g * t * t * t));
    }
    out.push_back(std::move(f));
  }
  return state.with_amplitudes(std::move(out), t);
}

AcceleratedResidual accelerated_frame_residual(const SuperposedState& source, double g, double kappa, double c,
                                               double fd_step)
{
  if (!(fd_step > 0.0) || !std::isfinite(fd_step))
    throw std::invalid_argument("difference step must be positive");
  const Potential free = Potential::zero();
  const Grid1D& grid = source.grid();
  const double t = source.time();

  // The uniform rest factor exp(-i m c² t) is divided out before differencing;
  // it solves the m c² part of the equation exactly.
  auto frame = [&](double dt) {
    const SuperposedState moved = dt == 0.0 ? source : propagate(source, free, dt, 1, c);
    SuperposedState mapped = to_accelerated_frame(moved, free, g, kappa);
    std::vector<Field> stripped;
    for (const auto& ch : mapped.channels()) {
      Field f = ch.amplitudes;
      const std::complex<double> undo = std::polar(1.0, ch.mass.real() * c * c * (t + dt));
      for (auto& z : f)
        z *= undo;
      stripped.push_back(std::move(f));
    }
    return mapped.with_amplitudes(std::move(stripped), t + dt);
  };

  const SuperposedState plus = frame(fd_step);
  const SuperposedState minus = frame(-fd_step);
  const SuperposedState centre = frame(0.0);
  const std::complex<double> i(0.0, 1.0);

  AcceleratedResidual result;
  double sum = 0.0;
  for (std::size_t k = 0; k < source.channel_count(); ++k) {
    const double m = source.channel(k).mass.real();
    const Field& psi = centre.channel(k).amplitudes;
    const Field lap = spectral::laplacian(grid, psi);
    Field r(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const std::complex<double> dpsi =
        (plus.channel(k).amplitudes[j] - minus.channel(k).amplitudes[j]) / (2.0 * fd_step);
      r[j] = i * dpsi - (-lap[j] / (2.0 * m) - m * g * grid.x(j) * psi[j]);
    }
    const double rk = l2_norm(grid, r);
    sum += rk * rk;
    if (k == 0)
      result.pointwise = std::move(r);
  }
  result.residual = std::sqrt(sum);
  const double norm = l2_norm(source);
  result.relative_residual = norm > 0.0 ? result.residual / norm : result.residual;
  return result;
}

CubicCoefficientReport validate_cubic_coefficient(const SuperposedState& source, double g, double c, double fd_step,
                                                  std::vector<double> candidates)
{
  // Least squares for κ in r(κ) ≈ r(κ0) + (κ - κ0) r'(κ0), r' by a symmetric
  // difference; two passes absorb the small curvature.
  auto field = [&](double kappa) { return accelerated_frame_residual(source, g, kappa, c, fd_step).pointwise; };
  double kappa = 0.0;
  const double h = 1e-2;
  for (int pass = 0; pass < 2; ++pass) {
    const Field r0 = field(kappa);
    const Field rp = field(kappa + h);
    const Field rm = field(kappa - h);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < r0.size(); ++j) {
      const std::complex<double> d = (rp[j] - rm[j]) / (2.0 * h);
      num += (std::conj(d) * r0[j]).real();
      den += std::norm(d);
    }
    if (den == 0.0)
      throw std::invalid_argument("residual does not depend on the cubic coefficient (g or t is zero)");
    kappa -= num / den;
  }

  CubicCoefficientReport report;
  report.kappa = kappa;
  report.residual_at_kappa = accelerated_frame_residual(source, g, kappa, c, fd_step).relative_residual;
  report.candidates = std::move(candidates);
  for (double k : report.candidates)
    report.residuals.push_back(accelerated_frame_residual(source, g, k, c, fd_step).relative_residual);
  report.deviation = std::abs(kappa - report.reference);
  return report;
}

} // namespace galilei
