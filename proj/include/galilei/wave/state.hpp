#pragma once

#include "galilei/wave/grid.hpp"

#include <complex>
#include <vector>

namespace galilei {

/// One eigencomponent of the mass operator M. A negative imaginary part of
/// the mass models an unstable particle. In the five dimensional picture the
/// channel carries the factor exp(-i m s), so that M = i∂_s has eigenvalue m.
struct MassChannel
{
  std::complex<double> mass{1.0, 0.0};
  Field amplitudes;
};

/// Finite superposition of mass channels on a shared grid, sampled at time t.
class SuperposedState
{
public:
  /// Throws std::invalid_argument for an empty channel list, amplitude arrays
  /// of the wrong size, non-finite amplitudes or repeated masses.
  SuperposedState(Grid1D grid, std::vector<MassChannel> channels, double t = 0.0);

  const Grid1D& grid() const { return grid_; }
  const std::vector<MassChannel>& channels() const { return channels_; }
  const MassChannel& channel(std::size_t i) const { return channels_.at(i); }
  std::size_t channel_count() const { return channels_.size(); }
  double time() const { return t_; }

  /// Same grid, new channel contents and time. Masses must keep matching.
  SuperposedState with_amplitudes(std::vector<Field> amplitudes, double t) const;

private:
  Grid1D grid_;
  std::vector<MassChannel> channels_;
  double t_;
};

/// sqrt(Σ_k ‖ψ_k‖²); channels with distinct masses are orthogonal.
double l2_norm(const SuperposedState& s);
double l2_distance(const SuperposedState& lhs, const SuperposedState& rhs);

SuperposedState single_channel(const Grid1D& grid, std::complex<double> mass, Field amplitudes, double t = 0.0);

} // namespace galilei
