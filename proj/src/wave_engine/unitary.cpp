#include "galilei/wave/spectral.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

void require_axial(const Vec3& a, const Vec3& v)
{
  if (a.tail<2>().squaredNorm() != 0.0 || v.tail<2>().squaredNorm() != 0.0)
    throw std::invalid_argument("element must act along the grid axis");
  if (!a.allFinite() || !v.allFinite())
    throw std::invalid_argument("element components must be finite");
}

} // namespace

SuperposedState apply_unitary(const ExtendedGalileiElement& g, const SuperposedState& state,
                              const Potential& potential)
{
  require_axial(g.a, g.v);
  if (!std::isfinite(g.b) || !std::isfinite(g.bm))
    throw std::invalid_argument("element components must be finite");
  if (g.b != 0.0 && !potential.is_zero())
    throw std::invalid_argument("time translation is not a symmetry in a potential");
  if (g == ExtendedGalileiElement::identity())
    return state;

  const Grid1D& grid = state.grid();
  const double t = state.time();
  const double v = g.v.x();
  const double d = v * t + g.a.x();

  std::vector<Field> out;
  out.reserve(state.channel_count());
  for (const auto& ch : state.channels()) {
    Field f = spectral::translate(grid, ch.amplitudes, d);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double x = grid.x(j) - d; // pre-image of the grid point
      const double theta = g.bm + v * x + 0.5 * v * v * t;
      f[j] *= std::exp(std::complex<double>(0.0, 1.0) * ch.mass * theta);
    }
    out.push_back(std::move(f));
  }
  return state.with_amplitudes(std::move(out), t + g.b);
}

SuperposedState apply_unitary(const GalileiElement& g, const SuperposedState& state, const Potential& potential)
{
  return apply_unitary(section(g), state, potential);
}

} // namespace galilei
