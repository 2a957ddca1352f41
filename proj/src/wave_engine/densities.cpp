#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace galilei {

LoopResult bargmann_loop_apply(const SuperposedState& state, double a, double v, LoopGroup group)
{
  const Vec3 av(a, 0.0, 0.0);
  const Vec3 vv(v, 0.0, 0.0);
  const std::array<GalileiElement, 4> steps = {GalileiElement::translation(av), GalileiElement::boost(vv),
                                               GalileiElement::translation(-av), GalileiElement::boost(-vv)};
  SuperposedState current = state;
  for (const auto& g : steps) {
    if (group == LoopGroup::Galilei)
      current = apply_unitary(g, current);
    else
      current = apply_unitary(ExtendedGalileiElement{0.0, g.b, g.a, g.v}, current);
  }

  LoopResult result{current, {}, {}, 0.0};
  for (std::size_t k = 0; k < state.channel_count(); ++k) {
    const Field& before = state.channel(k).amplitudes;
    const std::complex<double> norm = inner_product(state.grid(), before, before);
    if (std::abs(norm) == 0.0)
      throw std::invalid_argument("loop phase is undefined for an empty channel");
    const std::complex<double> phase = inner_product(state.grid(), before, current.channel(k).amplitudes) / norm;
    const std::complex<double> expected = std::exp(std::complex<double>(0.0, 1.0) * state.channel(k).mass * (a * v));
    result.phases.push_back(phase);
    result.expected.push_back(expected);
    result.max_phase_error = std::max(result.max_phase_error, std::abs(phase - expected));
  }
  return result;
}

std::vector<double> coherent_density(const SuperposedState& state, double s)
{
  std::vector<std::complex<double>> sum(state.grid().size(), 0.0);
  for (const auto& ch : state.channels()) {
    const std::complex<double> factor = std::exp(std::complex<double>(0.0, -1.0) * ch.mass * s);
    for (std::size_t j = 0; j < sum.size(); ++j)
      sum[j] += factor * ch.amplitudes[j];
  }
  std::vector<double> out(sum.size());
  std::transform(sum.begin(), sum.end(), out.begin(), [](const auto& z) { return std::norm(z); });
  return out;
}

std::vector<double> s_averaged_density(const SuperposedState& state)
{
  std::vector<double> out(state.grid().size(), 0.0);
  for (const auto& ch : state.channels())
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += std::norm(ch.amplitudes[j]);
  return out;
}

ComplexBoostReport boost_complex_mass(const SuperposedState& state, double v, double density_floor)
{
  if (!std::isfinite(v))
    throw std::invalid_argument("boost velocity must be finite");
  const Grid1D& grid = state.grid();
  const double t = state.time();
  const MassChannel& ch = state.channel(0);
  const SuperposedState single = single_channel(grid, ch.mass, ch.amplitudes, t);
  // Frame moving with v: the active boost by -v, sampled at x' = x - v t.
  const SuperposedState boosted = apply_unitary(ExtendedGalileiElement::boost(Vec3(-v, 0.0, 0.0)), single);
  const Field pulled = spectral::translate(grid, boosted.channel(0).amplitudes, v * t);

  double peak = 0.0;
  for (const auto& z : ch.amplitudes)
    peak = std::max(peak, std::norm(z));

  ComplexBoostReport report;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double rho = std::norm(ch.amplitudes[j]);
    if (rho < density_floor * peak || rho == 0.0)
      continue;
    const Event e{Vec3(grid.x(j), 0.0, 0.0), t};
    const Complex delta = delta_phase(ch.mass, e, Vec3(v, 0.0, 0.0));
    const double expected = std::exp(-2.0 * delta.imag());
    const double ratio = std::norm(pulled[j]) / rho;
    report.positions.push_back(grid.x(j));
    report.ratio.push_back(ratio);
    report.expected.push_back(expected);
    report.max_relative_error = std::max(report.max_relative_error, std::abs(ratio - expected) / expected);
  }

  const std::size_t n = report.positions.size();
  if (n >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += report.positions[i];
      my += std::log(report.ratio[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = report.positions[i] - mx;
      sxy += dx * (std::log(report.ratio[i]) - my);
      sxx += dx * dx;
    }
    report.log_slope = sxy / sxx;
  }
  return report;
}

} // namespace galilei
