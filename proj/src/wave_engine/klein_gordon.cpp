#include "galilei/wave/klein_gordon.hpp"

#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

double kg_frequency(double k, double mass, double c) { return c * std::sqrt(k * k + mass * mass * c * c); }

double kg_kinetic_frequency(double k, double mass, double c)
{
  return c * k * k / (std::sqrt(k * k + mass * mass * c * c) + mass * c);
}

KgState::KgState(Grid1D grid, double mass, double c, Field coefficients, double t)
    : grid_(std::move(grid)), mass_(mass), c_(c), coefficients_(std::move(coefficients)), t_(t)
{
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("Klein-Gordon mass must be positive");
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("speed of light must be positive");
  if (coefficients_.size() != grid_.size())
    throw std::invalid_argument("coefficients do not match the grid");
  if (!std::isfinite(t))
    throw std::invalid_argument("time must be finite");
}

KgState KgState::from_field(const Grid1D& grid, double mass, double c, const Field& stripped_field, double t)
{
  if (stripped_field.size() != grid.size())
    throw std::invalid_argument("field does not match the grid");
  return {grid, mass, c, spectral::forward(stripped_field), t};
}

Field KgState::stripped_field() const { return spectral::inverse(coefficients_); }

Field KgState::field() const
{
  Field f = stripped_field();
  const std::complex<double> rest = std::polar(1.0, -mass_ * c_ * c_ * t_);
  for (auto& z : f)
    z *= rest;
  return f;
}

KgState kg_evolve(const KgState& state, double dt, std::size_t steps)
{
  if (!std::isfinite(dt))
    throw std::invalid_argument("time step must be finite");
  const double span = dt * static_cast<double>(steps);
  Field c = state.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] *= std::polar(1.0, -kg_kinetic_frequency(state.grid().k(j), state.mass(), state.c()) * span);
  return {state.grid(), state.mass(), state.c(), std::move(c), state.time() + span};
}

KgComparison kg_nr_compare(const KgState& kg, const SuperposedState& sch, double horizon, std::size_t steps)
{
  if (sch.channel_count() != 1 || sch.channel(0).mass != std::complex<double>(kg.mass(), 0.0))
    throw std::invalid_argument("comparison needs a single Schrödinger channel of the same real mass");
  if (!(sch.grid() == kg.grid()))
    throw std::invalid_argument("states live on different grids");
  if (!(horizon > 0.0) || steps == 0)
    throw std::invalid_argument("comparison needs a positive horizon and step count");
  if (l2_distance(kg.grid(), kg.stripped_field(), sch.channel(0).amplitudes) > 1e-12)
    throw std::invalid_argument("initial fields differ");

  const double dt = horizon / static_cast<double>(steps);
  const KgState kg_end = kg_evolve(kg, dt, steps);
  const SuperposedState sch_end = propagate(sch, Potential::zero(), dt, steps, 0.0);

  KgComparison out;
  out.horizon = horizon;
  out.c = kg.c();
  out.l2_error = l2_distance(kg.grid(), kg_end.stripped_field(), sch_end.channel(0).amplitudes);
  const double norm = l2_norm(sch_end);
  out.relative_error = norm > 0.0 ? out.l2_error / norm : out.l2_error;
  return out;
}

} // namespace galilei
