#pragma once

// Free Klein-Gordon states as positive-frequency plane-wave sums with the
// exact dispersion ω(k) = c sqrt(k² + m² c²).

#include "galilei/wave/grid.hpp"
#include "galilei/wave/state.hpp"

namespace galilei {

double kg_frequency(double k, double mass, double c);
/// ω(k) - m c², computed without cancellation.
double kg_kinetic_frequency(double k, double mass, double c);

/// Plane-wave coefficients of the field φ = exp(-i m c² t) ϕ. The rest factor
/// is kept analytic in t; `coefficients` are the DFT of ϕ on the grid.
/// Evolution multiplies the coefficients by exp(-i (ω - m c²) dt), which is
/// exp(-i ω dt) once the rest factor is restored.
class KgState
{
public:
  KgState(Grid1D grid, double mass, double c, Field coefficients, double t = 0.0);

  /// Coefficients of a given initial (rest-stripped) field.
  static KgState from_field(const Grid1D& grid, double mass, double c, const Field& stripped_field, double t = 0.0);

  const Grid1D& grid() const { return grid_; }
  double mass() const { return mass_; }
  double c() const { return c_; }
  double time() const { return t_; }
  const Field& coefficients() const { return coefficients_; }

  /// ϕ(x, t)
  Field stripped_field() const;
  /// φ(x, t) = exp(-i m c² t) ϕ(x, t)
  Field field() const;

private:
  Grid1D grid_;
  double mass_;
  double c_;
  Field coefficients_;
  double t_;
};

/// Exact free evolution over steps × dt.
KgState kg_evolve(const KgState& state, double dt, std::size_t steps);

struct KgComparison
{
  double l2_error = 0.0;
  double relative_error = 0.0;
  double horizon = 0.0;
  double c = 0.0;
};

/// Evolves both states for `horizon` and compares the rest-stripped KG field
/// with the Schrödinger evolution. The factor exp(-i m c² t) is common to both
/// sides and is removed analytically, so the Schrödinger side is evolved
/// without the rest term. Throws std::invalid_argument if the Schrödinger state
/// is not a single real channel of the same mass, or if the initial fields
/// differ by more than 1e-12 in L².
KgComparison kg_nr_compare(const KgState& kg, const SuperposedState& sch, double horizon, std::size_t steps);

} // namespace galilei
