#include "galilei/wave/state.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

void validate(const Grid1D& grid, const std::vector<MassChannel>& channels, double t)
{
  if (channels.empty())
    throw std::invalid_argument("state needs at least one mass channel");
  if (!std::isfinite(t))
    throw std::invalid_argument("state time must be finite");
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto& ch = channels[i];
    if (!std::isfinite(ch.mass.real()) || !std::isfinite(ch.mass.imag()))
      throw std::invalid_argument("channel mass must be finite");
    if (ch.amplitudes.size() != grid.size())
      throw std::invalid_argument("channel amplitudes do not match the grid");
    for (const auto& z : ch.amplitudes)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("channel amplitudes must be finite");
    for (std::size_t j = 0; j < i; ++j)
      if (channels[j].mass == ch.mass)
        throw std::invalid_argument("mass channels must have distinct masses");
  }
}

} // namespace

SuperposedState::SuperposedState(Grid1D grid, std::vector<MassChannel> channels, double t)
    : grid_(std::move(grid)), channels_(std::move(channels)), t_(t)
{
  validate(grid_, channels_, t_);
}

SuperposedState SuperposedState::with_amplitudes(std::vector<Field> amplitudes, double t) const
{
  if (amplitudes.size() != channels_.size())
    throw std::invalid_argument("channel count mismatch");
  std::vector<MassChannel> out(channels_.size());
  for (std::size_t i = 0; i < channels_.size(); ++i)
    out[i] = {channels_[i].mass, std::move(amplitudes[i])};
  return {grid_, std::move(out), t};
}

double l2_norm(const SuperposedState& s)
{
  double sum = 0.0;
  for (const auto& ch : s.channels()) {
    const double n = l2_norm(s.grid(), ch.amplitudes);
    sum += n * n;
  }
  return std::sqrt(sum);
}

double l2_distance(const SuperposedState& lhs, const SuperposedState& rhs)
{
  if (!(lhs.grid() == rhs.grid()) || lhs.channel_count() != rhs.channel_count())
    throw std::invalid_argument("states live on different grids or channel sets");
  double sum = 0.0;
  for (std::size_t i = 0; i < lhs.channel_count(); ++i) {
    if (lhs.channel(i).mass != rhs.channel(i).mass)
      throw std::invalid_argument("states have different mass channels");
    const double d = l2_distance(lhs.grid(), lhs.channel(i).amplitudes, rhs.channel(i).amplitudes);
    sum += d * d;
  }
  return std::sqrt(sum);
}

SuperposedState single_channel(const Grid1D& grid, std::complex<double> mass, Field amplitudes, double t)
{
  return {grid, {MassChannel{mass, std::move(amplitudes)}}, t};
}

} // namespace galilei
