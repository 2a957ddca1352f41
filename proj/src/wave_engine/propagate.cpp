#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

SuperposedState propagate(const SuperposedState& state, const Potential& potential, double dt, std::size_t steps,
                          double c)
{
  if (!std::isfinite(dt) || !std::isfinite(c))
    throw std::invalid_argument("propagation parameters must be finite");
  if (steps == 0 || dt == 0.0)
    return state;

  const Grid1D& grid = state.grid();
  const std::complex<double> minus_i(0.0, -1.0);
  const double t0 = state.time();

  std::vector<Field> out;
  out.reserve(state.channel_count());
  for (const auto& ch : state.channels()) {
    const std::complex<double> m = ch.mass;
    if (m == 0.0)
      throw std::invalid_argument("propagation needs a nonzero mass");
    Field kinetic(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double k = grid.k(j);
      kinetic[j] = std::exp(minus_i * (m * c * c + k * k / (2.0 * m)) * dt);
    }

    Field psi = ch.amplitudes;
    for (std::size_t n = 0; n < steps; ++n) {
      const bool has_potential = !potential.is_zero();
      Field half;
      if (has_potential) {
        const double t_mid = t0 + (static_cast<double>(n) + 0.5) * dt;
        const Field v = potential.sample(grid, t_mid, m);
        half.resize(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
          half[j] = std::exp(minus_i * v[j] * (0.5 * dt));
          psi[j] *= half[j];
        }
      }
      Field c_hat = spectral::forward(psi);
      for (std::size_t j = 0; j < grid.size(); ++j)
        c_hat[j] *= kinetic[j];
      psi = spectral::inverse(c_hat);
      if (has_potential)
        for (std::size_t j = 0; j < grid.size(); ++j)
          psi[j] *= half[j];
    }
    out.push_back(std::move(psi));
  }
  return state.with_amplitudes(std::move(out), t0 + static_cast<double>(steps) * dt);
}

} // namespace galilei
