#pragma once

// Classical side: canonical maps of the Galilean boost, the five dimensional
// Galilean metric and Lagrangian, the free-particle boundary term and the
// photon-emission mass ratio.

#include "galilei/group_kernel.hpp"

#include <json.hpp>

#include <vector>

namespace galilei {

struct PhaseState
{
  Vec3 q = Vec3::Zero();
  Vec3 p = Vec3::Zero();
  double energy = 0.0;
  double mass = 1.0;
  double t = 0.0;

  /// State on the shell E = m c² + p² / 2m.
  static PhaseState on_shell(const Vec3& q, const Vec3& p, double mass, double c, double t = 0.0);

  double shell_energy(double c) const;
  /// |E - (m c² + p²/2m)| / |E| ≤ rel_tol.
  bool is_on_shell(double c, double rel_tol = 1e-12) const;
};

/// Frame change generated by F2 = P·(q - v t): q' = q - v t, p' = p, E' = E - v·p.
PhaseState f2_map(const PhaseState& s, const Vec3& v);

/// Mass dependent map generated by F3 = -Q·(p - m v) + m v² t / 2:
/// q unchanged, P = p - m v, K = H + m v² / 2.
PhaseState f3_map(const PhaseState& s, const Vec3& v);

/// f3_map ∘ f2_map in one step: E'' = E - v·p + m v²/2, p'' = p - m v,
/// q'' = q - v t. Preserves the non-relativistic shell.
PhaseState composed_boost_map(const PhaseState& s, const Vec3& v);

// ---------------------------------------------------------------------------
// Five dimensional metric. Index order (x, y, z, t, s).

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

struct Metric5
{
  /// diag(0, 0, 0, -1, 0)
  static Mat5 eta();
  /// Galilean metric: identity on space, -1 on the (t, s) off-diagonal.
  static Mat5 galilean();
  /// g = η + h / c²
  static Mat5 full(double c);

  /// c² g_AB dX^A dX^B; equals -c² dt² + dx² - 2 dt ds.
  static double line_element(const Vec5& dX, double c);
};

/// JSON table of η, h and g for a given c.
nlohmann::json metric5_table(double c);

Vec5 to_vec5(const Event5& e);
Event5 to_event5(const Vec5& X);

/// (X|Y) = X·Y - X₄Y₅ - X₅Y₄ (spatial dot minus the t-s cross terms).
double inner_product5(const Vec5& X, const Vec5& Y);

/// Linear part of the frame change x' = x - v t, t' = t, s' = s - v·x + v² t/2,
/// applied to a displacement vector.
Vec5 frame_change5(const Vec5& X, const Vec3& v);

/// L = -m c² (1 - (ẋ²/2 - ṡ)/c²) = -m c² + m (ẋ²/2 - ṡ).
double lagrangian5(const Vec3& xdot, double sdot, double m, double c);

/// Velocities seen after the frame change: ẋ' = ẋ - v, ṡ' = ṡ - ẋ·v + v²/2.
std::pair<Vec3, double> frame_change_velocities(const Vec3& xdot, double sdot, const Vec3& v);

// ---------------------------------------------------------------------------
// Boundary term of the free Lagrangian

struct Trajectory
{
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Vec3> samples;
  double mass = 1.0;

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double duration() const { return samples.empty() ? 0.0 : static_cast<double>(samples.size() - 1) * dt; }
};

struct BoundaryTermReport
{
  /// Running integral of L' - L at every sample (first entry 0).
  std::vector<double> gap_curve;
  double gap_integral = 0.0;
  /// Δ_m(x(t_end), t_end) - Δ_m(x(t_start), t_start) in the original frame.
  double delta_difference = 0.0;
  /// Same integral on every other sample, and the Richardson combination.
  double gap_coarse = 0.0;
  double gap_richardson = 0.0;
  double action = 0.0;
  double boosted_action = 0.0;
};

/// Integrates L' - L, with L = m ẋ²/2 and L' evaluated on ẋ' = ẋ - v, using
/// the midpoint rule on difference-quotient velocities. Throws
/// std::invalid_argument for fewer than 8 samples or a non-positive step.
BoundaryTermReport boundary_term_check(const Trajectory& traj, const Vec3& v);

// ---------------------------------------------------------------------------

/// Mass of the excited state from momentum balance of photon emission:
/// m = m₀ (1 + v/c). Throws std::invalid_argument unless 0 ≤ v < c.
double decay_mass_ratio(double m0, double v, double c);

} // namespace galilei
