#include "galilei/mechanics.hpp"

#include <stdexcept>

namespace galilei {

double lagrangian5(const Vec3& xdot, double sdot, double m, double c)
{
  return -m * c * c + m * (0.5 * xdot.squaredNorm() - sdot);
}

std::pair<Vec3, double> frame_change_velocities(const Vec3& xdot, double sdot, const Vec3& v)
{
  return {xdot - v, sdot - xdot.dot(v) + 0.5 * v.squaredNorm()};
}

namespace {

struct Actions
{
  double free = 0.0;
  double boosted = 0.0;
};

// Midpoint rule over consecutive samples i -> i + stride; a trailing partial
// step is taken at the fine stride.
Actions integrate(const Trajectory& traj, const Vec3& v, std::size_t stride, std::vector<double>* gap_curve)
{
  Actions out;
  const double m = traj.mass;
  std::size_t i = 0;
  const std::size_t last = traj.samples.size() - 1;
  while (i < last)
  {
    const std::size_t step = (i + stride <= last) ? stride : 1;
    const double h = static_cast<double>(step) * traj.dt;
    const Vec3 xdot = (traj.samples[i + step] - traj.samples[i]) / h;
    out.free += 0.5 * m * xdot.squaredNorm() * h;
    out.boosted += 0.5 * m * (xdot - v).squaredNorm() * h;
    i += step;
    if (gap_curve)
      gap_curve->push_back(out.boosted - out.free);
  }
  return out;
}

} // namespace

BoundaryTermReport boundary_term_check(const Trajectory& traj, const Vec3& v)
{
  if (traj.samples.size() < 8)
    throw std::invalid_argument("boundary_term_check: trajectory needs at least 8 samples");
  if (!(traj.dt > 0.0))
    throw std::invalid_argument("boundary_term_check: time step must be positive");

  BoundaryTermReport report;
  report.gap_curve.reserve(traj.samples.size());
  report.gap_curve.push_back(0.0);
  const Actions fine = integrate(traj, v, 1, &report.gap_curve);
  const Actions coarse = integrate(traj, v, 2, nullptr);

  report.action = fine.free;
  report.boosted_action = fine.boosted;
  report.gap_integral = fine.boosted - fine.free;
  report.gap_coarse = coarse.boosted - coarse.free;
  report.gap_richardson = (4.0 * report.gap_integral - report.gap_coarse) / 3.0;

  const Event start{traj.samples.front(), traj.t0};
  const Event end{traj.samples.back(), traj.time(traj.samples.size() - 1)};
  report.delta_difference = delta_phase(traj.mass, end, v) - delta_phase(traj.mass, start, v);
  return report;
}

} // namespace galilei
