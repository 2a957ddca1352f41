#include "galilei/mechanics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace galilei;

namespace {

std::mt19937_64 rng(2024);
std::uniform_real_distribution<double> unif(-10.0, 10.0);

Vec3 random_vec() { return {unif(rng), unif(rng), unif(rng)}; }
Vec5 random_vec5()
{
  Vec5 X;
  X << unif(rng), unif(rng), unif(rng), unif(rng), unif(rng);
  return X;
}

void expect_vec_eq(const Vec3& a, const Vec3& b, double tol)
{
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol) << a.transpose() << " vs " << b.transpose();
}

// Five-point Gauss-Legendre on [a, b].
template <class F> double gauss_legendre(F f, double a, double b, int panels)
{
  static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
  static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
                              0.2369268850561891};
  double sum = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < 5; ++i)
      sum += w[i] * f(mid + 0.5 * h * x[i]) * 0.5 * h;
  }
  return sum;
}

} // namespace

// ---------------------------------------------------------------------------
// Canonical maps

TEST(F2Map, Examples)
{
  const PhaseState s{Vec3(1, 2, 3), Vec3(2, 0, 0), 102.0, 1.0, 0.5};
  const PhaseState out = f2_map(s, Vec3(1, 0, 0));
  EXPECT_EQ(out.energy, 100.0);
  EXPECT_EQ(out.p, Vec3(2, 0, 0));
  EXPECT_EQ(out.q, Vec3(0.5, 2, 3));
  const PhaseState same = f2_map(s, Vec3::Zero());
  EXPECT_EQ(same.q, s.q);
  EXPECT_EQ(same.p, s.p);
  EXPECT_EQ(same.energy, s.energy);
}

TEST(F2Map, InverseVelocityUndoes)
{
  for (int i = 0; i < 1000; ++i) {
    const PhaseState s{random_vec(), random_vec(), unif(rng), 1.0 + std::abs(unif(rng)), unif(rng)};
    const Vec3 v = random_vec();
    const PhaseState back = f2_map(f2_map(s, v), -v);
    expect_vec_eq(back.q, s.q, 1e-12);
    expect_vec_eq(back.p, s.p, 1e-12);
    EXPECT_NEAR(back.energy, s.energy, 1e-12 * (1.0 + std::abs(s.energy) + v.norm() * s.p.norm()));
  }
}

TEST(F3Map, Examples)
{
  const PhaseState s{Vec3(1, 2, 3), Vec3(2, 0, 0), 5.0, 1.0, 0.0};
  const PhaseState out = f3_map(s, Vec3(1, 0, 0));
  EXPECT_EQ(out.energy, 5.5);
  EXPECT_EQ(out.p, Vec3(1, 0, 0));
  const PhaseState same = f3_map(s, Vec3::Zero());
  EXPECT_EQ(same.p, s.p);
  EXPECT_EQ(same.energy, s.energy);
}

TEST(F3Map, PositionUnchanged)
{
  for (int i = 0; i < 1000; ++i) {
    const PhaseState s{random_vec(), random_vec(), unif(rng), 2.0, unif(rng)};
    EXPECT_EQ(f3_map(s, random_vec()).q, s.q);
  }
}

TEST(ComposedBoost, Example)
{
  const PhaseState s = PhaseState::on_shell(Vec3::Zero(), Vec3(2, 0, 0), 1.0, 10.0);
  EXPECT_EQ(s.energy, 102.0);
  const PhaseState out = composed_boost_map(s, Vec3(1, 0, 0));
  EXPECT_EQ(out.energy, 100.5);
  EXPECT_EQ(out.p, Vec3(1, 0, 0));
  EXPECT_EQ(out.energy, 0.5 * 1.0 + 100.0);
  EXPECT_TRUE(out.is_on_shell(10.0));
}

TEST(ComposedBoost, EqualsF3AfterF2AndStaysOnShell)
{
  for (int i = 0; i < 10000; ++i) {
    const double m = 0.1 + std::abs(unif(rng));
    const double c = 1.0 + std::abs(unif(rng)) * 10.0;
    const PhaseState s = PhaseState::on_shell(random_vec(), random_vec(), m, c, unif(rng));
    const Vec3 v = random_vec();
    const PhaseState a = composed_boost_map(s, v);
    const PhaseState b = f3_map(f2_map(s, v), v);
    expect_vec_eq(a.q, b.q, 0.0);
    expect_vec_eq(a.p, b.p, 0.0);
    EXPECT_NEAR(a.energy, b.energy, 1e-12 * std::abs(a.energy));
    EXPECT_TRUE(a.is_on_shell(c, 1e-12));
  }
}

TEST(PhaseState, OffShellIsDetected)
{
  PhaseState s = PhaseState::on_shell(Vec3::Zero(), Vec3(1, 0, 0), 1.0, 10.0);
  EXPECT_TRUE(s.is_on_shell(10.0));
  s.energy += 1e-6;
  EXPECT_FALSE(s.is_on_shell(10.0));
  EXPECT_FALSE(f2_map(PhaseState::on_shell(Vec3::Zero(), Vec3(1, 0, 0), 1.0, 10.0), Vec3(1, 0, 0)).is_on_shell(10.0));
}

// ---------------------------------------------------------------------------
// Five dimensional metric

TEST(Metric5, InnerProductExamples)
{
  Vec5 X;
  X << 1, 0, 0, 2, 3;
  EXPECT_EQ(inner_product5(X, X), -11.0);
  Vec5 A, B;
  A << 1, 0, 0, 0, 0;
  B << 0, 1, 0, 0, 0;
  EXPECT_EQ(inner_product5(A, B), 0.0);
}

TEST(Metric5, InnerProductMatchesGalileanMatrix)
{
  for (int i = 0; i < 100; ++i) {
    const Vec5 X = random_vec5(), Y = random_vec5();
    EXPECT_NEAR(inner_product5(X, Y), X.dot(Metric5::galilean() * Y), 1e-12);
    EXPECT_NEAR(inner_product5(X, Y), inner_product5(Y, X), 1e-12);
    EXPECT_NEAR(inner_product5(2.0 * X + Y, Y), 2.0 * inner_product5(X, Y) + inner_product5(Y, Y), 1e-9);
  }
}

TEST(Metric5, BoostInvariance)
{
  for (int i = 0; i < 10000; ++i) {
    const Vec5 X = random_vec5(), Y = random_vec5();
    const Vec3 v = random_vec() * 0.1;
    const double before = inner_product5(X, Y);
    const double after = inner_product5(frame_change5(X, v), frame_change5(Y, v));
    EXPECT_LE(std::abs(after - before), 1e-12 * std::max(1.0, X.squaredNorm() + Y.squaredNorm()));
  }
}

TEST(Metric5, FrameChangeMatchesExtendedAction)
{
  // The frame change is the linear part of the boost by -v.
  for (int i = 0; i < 100; ++i) {
    const Event5 e{random_vec(), unif(rng), unif(rng)};
    const Vec3 v = random_vec();
    const Vec5 lhs = frame_change5(to_vec5(e), v);
    const Vec5 rhs = to_vec5(act(ExtendedGalileiElement::boost(-v), e));
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Metric5, GalileanPartRecoveredExactly)
{
  for (double c : {1.0, 2.0, 4.0, 10.0, 20.0, 0.5, 1024.0}) {
    const Mat5 h = c * c * (Metric5::full(c) - Metric5::eta());
    EXPECT_EQ(h, Metric5::galilean()) << "c = " << c;
  }
  EXPECT_THROW(Metric5::full(0.0), std::invalid_argument);
}

TEST(Metric5, LineElement)
{
  for (double c : {2.0, 4.0}) {
    for (int i = 0; i < 100; ++i) {
      Vec5 dX;
      for (int k = 0; k < 5; ++k)
        dX[k] = std::round(unif(rng));
      const double expected = -c * c * dX[3] * dX[3] + dX.head<3>().squaredNorm() - 2.0 * dX[3] * dX[4];
      EXPECT_EQ(Metric5::line_element(dX, c), expected);
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const Vec5 dX = random_vec5();
    const double c = 3.0;
    const double expected = -c * c * dX[3] * dX[3] + dX.head<3>().squaredNorm() - 2.0 * dX[3] * dX[4];
    EXPECT_NEAR(Metric5::line_element(dX, c), expected, 1e-12 * 1000.0);
  }
}

TEST(Metric5, TableJson)
{
  const nlohmann::json t = metric5_table(10.0);
  EXPECT_EQ(t.at("eta")[3][3], -1.0);
  EXPECT_EQ(t.at("h")[3][4], -1.0);
  EXPECT_EQ(t.at("h")[0][0], 1.0);
  EXPECT_EQ(t.at("g")[3][3], -1.0);
  EXPECT_EQ(t.at("index_order")[4], "s");
}

// ---------------------------------------------------------------------------
// Lagrangian

TEST(Lagrangian5, Examples)
{
  EXPECT_EQ(lagrangian5(Vec3::Zero(), 0.0, 2.0, 3.0), -18.0);
  EXPECT_EQ(lagrangian5(Vec3(1, 0, 0), 0.0, 1.0, 10.0), -99.5);
}

TEST(Lagrangian5, InvariantUnderInducedVelocityLaw)
{
  for (int i = 0; i < 10000; ++i) {
    const Vec3 xdot = random_vec(), v = random_vec();
    const double sdot = unif(rng);
    const auto [xp, sp] = frame_change_velocities(xdot, sdot, v);
    EXPECT_EQ(xp, xdot - v);
    // ṡ' differentiated from s' = s - v·x + v² t/2 along the path.
    EXPECT_NEAR(sp, sdot - v.dot(xdot) + 0.5 * v.squaredNorm(), 1e-12);
    const double l = lagrangian5(xdot, sdot, 1.3, 5.0);
    EXPECT_LE(std::abs(lagrangian5(xp, sp, 1.3, 5.0) - l), 1e-12 * std::max(1.0, std::abs(l)));
  }
}

// ---------------------------------------------------------------------------
// Boundary term

TEST(BoundaryTerm, StraightLineExample)
{
  Trajectory traj{0.0, 0.01, {}, 1.0};
  for (int i = 0; i <= 100; ++i)
    traj.samples.push_back(Vec3(traj.time(i), 0, 0));
  const BoundaryTermReport r = boundary_term_check(traj, Vec3(1, 0, 0));
  EXPECT_NEAR(r.gap_integral, -0.5, 1e-12);
  EXPECT_NEAR(r.delta_difference, -0.5, 1e-12);
  EXPECT_EQ(r.gap_curve.size(), traj.samples.size());
  EXPECT_EQ(r.gap_curve.front(), 0.0);
}

TEST(BoundaryTerm, ZeroVelocity)
{
  Trajectory traj{0.0, 0.1, {}, 2.0};
  for (int i = 0; i < 10; ++i)
    traj.samples.push_back(Vec3(i * i * 0.01, 1.0, 0.0));
  const BoundaryTermReport r = boundary_term_check(traj, Vec3::Zero());
  EXPECT_EQ(r.gap_integral, 0.0);
  EXPECT_EQ(r.delta_difference, 0.0);
}

TEST(BoundaryTerm, PolynomialPathsAgainstQuadratureOracle)
{
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 c1(coef(rng), coef(rng), coef(rng)), c2(coef(rng), coef(rng), coef(rng)), c3(coef(rng), coef(rng), coef(rng));
    const Vec3 v(coef(rng), coef(rng), coef(rng));
    const double m = 0.5 + std::abs(coef(rng));
    auto x = [&](double t) -> Vec3 { return c1 * t + c2 * t * t + c3 * t * t * t; };
    auto xdot = [&](double t) -> Vec3 { return c1 + 2.0 * c2 * t + 3.0 * c3 * t * t; };

    Trajectory traj{0.2, 1e-3, {}, m};
    for (int i = 0; i <= 1000; ++i)
      traj.samples.push_back(x(traj.time(i)));
    const BoundaryTermReport r = boundary_term_check(traj, v);

    const double oracle = gauss_legendre(
      [&](double t) { return 0.5 * m * ((xdot(t) - v).squaredNorm() - xdot(t).squaredNorm()); }, 0.2, 1.2, 20);
    const double action_scale = std::max(1.0, std::abs(r.action));
    EXPECT_LE(std::abs(r.gap_integral - oracle), 1e-6 * action_scale);
    EXPECT_LE(std::abs(r.delta_difference - oracle), 1e-6 * action_scale);
    EXPECT_LE(std::abs(r.gap_richardson - r.gap_integral), 1e-6 * action_scale);
  }
}

TEST(BoundaryTerm, RejectsShortOrBadTrajectories)
{
  Trajectory traj{0.0, 0.1, std::vector<Vec3>(7, Vec3::Zero()), 1.0};
  EXPECT_THROW(boundary_term_check(traj, Vec3(1, 0, 0)), std::invalid_argument);
  traj.samples.resize(10);
  traj.dt = 0.0;
  EXPECT_THROW(boundary_term_check(traj, Vec3(1, 0, 0)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Decay kinematics

TEST(DecayMass, Examples)
{
  EXPECT_EQ(decay_mass_ratio(1.0, 0.1, 1.0), 1.1);
  EXPECT_EQ(decay_mass_ratio(3.0, 0.0, 2.0), 3.0);
  EXPECT_NEAR(decay_mass_ratio(1.0, 0.2, 1.0) - 1.0, 2.0 * (decay_mass_ratio(1.0, 0.1, 1.0) - 1.0), 1e-15);
}

TEST(DecayMass, MatchesFormulaForFuzzedInputs)
{
  std::uniform_real_distribution<double> frac(0.0, 0.99);
  for (int i = 0; i < 10000; ++i) {
    const double m0 = 0.1 + std::abs(unif(rng));
    const double c = 1.0 + std::abs(unif(rng));
    const double v = frac(rng) * c;
    EXPECT_EQ(decay_mass_ratio(m0, v, c), m0 * (1.0 + v / c));
  }
}

TEST(DecayMass, RejectsOutOfRange)
{
  EXPECT_THROW(decay_mass_ratio(1.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(decay_mass_ratio(1.0, -0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(decay_mass_ratio(1.0, 0.1, 0.0), std::invalid_argument);
}
