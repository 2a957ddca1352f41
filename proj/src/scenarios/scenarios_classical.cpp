#include "bodies.hpp"

#include "galilei/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace galilei::scenarios::detail {

void canonical_maps(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink)
{
  const double c = cfg.physics.c;
  const Vec3 v(cfg.physics.v.at(0), cfg.physics.v.at(1), cfg.physics.v.at(2));
  std::mt19937_64 rng(cfg.run.seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  auto vec = [&] { return Vec3(u(rng), u(rng), u(rng)); };

  double shell = 0.0, composed_q = 0.0, composed_p = 0.0, composed_e = 0.0, lagrangian = 0.0;
  for (std::size_t i = 0; i < cfg.run.steps; ++i) {
    const double m = 0.1 + std::abs(u(rng));
    const PhaseState s = PhaseState::on_shell(vec(), vec(), m, c, u(rng));
    const Vec3 w = vec();
    const PhaseState a = composed_boost_map(s, w);
    const PhaseState b = f3_map(f2_map(s, w), w);
    shell = std::max(shell, std::abs(a.energy - a.shell_energy(c)) / std::abs(a.energy));
    composed_q = std::max(composed_q, (a.q - b.q).cwiseAbs().maxCoeff());
    composed_p = std::max(composed_p, (a.p - b.p).cwiseAbs().maxCoeff());
    composed_e = std::max(composed_e, std::abs(a.energy - b.energy) / std::abs(a.energy));

    const Vec3 xdot = vec();
    const double sdot = u(rng);
    const auto [xd, sd] = frame_change_velocities(xdot, sdot, w);
    lagrangian = std::max(lagrangian, std::abs(lagrangian5(xd, sd, m, c) - lagrangian5(xdot, sdot, m, c)) /
                                        std::max(1.0, std::abs(lagrangian5(xdot, sdot, m, c))));
  }
  out.params["samples"] = cfg.run.steps;
  out.at_most("on_shell_relative_error", shell, 1e-12);
  out.at_most("composed_vs_f3_f2.q", composed_q, 0.0);
  out.at_most("composed_vs_f3_f2.p", composed_p, 0.0);
  out.at_most("composed_vs_f3_f2.energy_relative", composed_e, 1e-12);
  out.at_most("lagrangian5_invariance_relative", lagrangian, 1e-12);

  // Free particle on a straight line: the action changes by a boundary term.
  Trajectory traj{0.0, 1e-3, {}, 1.0};
  for (int i = 0; i <= 1000; ++i)
    traj.samples.push_back(Vec3(0.5 * traj.time(i), 0.0, 0.0));
  const BoundaryTermReport bt = boundary_term_check(traj, v);
  out.info("boundary.gap_integral", bt.gap_integral);
  out.info("boundary.delta_difference", bt.delta_difference);
  out.at_most("boundary.gap_vs_delta", std::abs(bt.gap_integral - bt.delta_difference), 1e-12);

  // Photon emission kinematics, exact in floating point.
  bool decay_exact = true;
  std::uniform_real_distribution<double> frac(0.0, 0.99);
  for (std::size_t i = 0; i < cfg.run.steps; ++i) {
    const double m0 = 0.1 + std::abs(u(rng)), beta = frac(rng);
    decay_exact = decay_exact && decay_mass_ratio(m0, beta * c, c) == m0 * (1.0 + beta * c / c);
  }
  out.equals("decay_mass_ratio_example", decay_mass_ratio(1.0, 0.1, 1.0), 1.1);
  out.holds("decay_mass_ratio_exact", decay_exact);

  std::vector<double> t, gap;
  for (std::size_t i = 0; i < bt.gap_curve.size(); i += 10) {
    t.push_back(traj.time(i));
    gap.push_back(bt.gap_curve[i]);
  }
  sink.write("boundary_gap.csv", csv_columns({"t", "integral_of_L_prime_minus_L"}, {t, gap}));
}

} // namespace galilei::scenarios::detail
