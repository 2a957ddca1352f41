#pragma once

// Rotation-free Galilei group G_I and its central extension.
//
// Conventions used throughout the library:
//  * Group actions are active: g ▷ (x, t) = (x + v t + a, t + b).
//  * A frame change x' = x - v t is the action of the boost by -v.
//  * hbar = 1. The speed of light is always an explicit argument.

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace galilei {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Complex = std::complex<double>;

struct Event
{
  Vec3 x = Vec3::Zero();
  double t = 0.0;
};

/// Point of the five dimensional Newtonian spacetime (x, t, s). The fifth
/// coordinate s has units of velocity times length and is conjugate to mass.
struct Event5
{
  Vec3 x = Vec3::Zero();
  double t = 0.0;
  double s = 0.0;

  Event projected() const { return {x, t}; }
};

/// Element (b, a, v) of G_I: time shift b, spatial shift a, boost velocity v.
struct GalileiElement
{
  double b = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 v = Vec3::Zero();

  static GalileiElement identity() { return {}; }
  static GalileiElement time_translation(double b) { return {b, Vec3::Zero(), Vec3::Zero()}; }
  static GalileiElement translation(const Vec3& a) { return {0.0, a, Vec3::Zero()}; }
  static GalileiElement boost(const Vec3& v) { return {0.0, Vec3::Zero(), v}; }
};

/// Element (b_m, b, a, v) of the centrally extended group. b_m pairs with the
/// mass generator M.
struct ExtendedGalileiElement
{
  double bm = 0.0;
  double b = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 v = Vec3::Zero();

  static ExtendedGalileiElement identity() { return {}; }
  static ExtendedGalileiElement mass_shift(double bm) { return {bm, 0.0, Vec3::Zero(), Vec3::Zero()}; }
  static ExtendedGalileiElement time_translation(double b) { return {0.0, b, Vec3::Zero(), Vec3::Zero()}; }
  static ExtendedGalileiElement translation(const Vec3& a) { return {0.0, 0.0, a, Vec3::Zero()}; }
  static ExtendedGalileiElement boost(const Vec3& v) { return {0.0, 0.0, Vec3::Zero(), v}; }
};

bool operator==(const GalileiElement& lhs, const GalileiElement& rhs);
bool operator==(const ExtendedGalileiElement& lhs, const ExtendedGalileiElement& rhs);

/// Largest absolute component difference.
double max_abs_diff(const GalileiElement& lhs, const GalileiElement& rhs);
double max_abs_diff(const ExtendedGalileiElement& lhs, const ExtendedGalileiElement& rhs);
double max_abs_diff(const Event& lhs, const Event& rhs);
double max_abs_diff(const Event5& lhs, const Event5& rhs);

// Group laws. compose(g, h) is the product g·h.
GalileiElement compose(const GalileiElement& g, const GalileiElement& h);
ExtendedGalileiElement compose(const ExtendedGalileiElement& g, const ExtendedGalileiElement& h);
GalileiElement inverse(const GalileiElement& g);
ExtendedGalileiElement inverse(const ExtendedGalileiElement& g);

inline GalileiElement operator*(const GalileiElement& g, const GalileiElement& h) { return compose(g, h); }
inline ExtendedGalileiElement operator*(const ExtendedGalileiElement& g, const ExtendedGalileiElement& h)
{
  return compose(g, h);
}

/// Drops b_m. This is a group homomorphism onto G_I.
GalileiElement erase(const ExtendedGalileiElement& g);

/// Lift of a G_I element used by the projective representation:
/// b_m = v·a - v² b / 2. It is the b_m produced by the factorization
/// g = boost(v) · translation(a - b v) · time_translation(b).
ExtendedGalileiElement section(const GalileiElement& g);

Event act(const GalileiElement& g, const Event& e);
/// The traditional action of the extended group on (x, t); it ignores b_m.
Event act(const ExtendedGalileiElement& g, const Event& e);
/// Faithful action on the five dimensional spacetime:
/// (x + v t + a, t + b, s + b_m + v·x + v² t / 2).
Event5 act(const ExtendedGalileiElement& g, const Event5& e);

// ---------------------------------------------------------------------------
// Phases and cocycles

/// Boost phase Δ_m(x, t) = m (v² t / 2 - v·x) for the frame change
/// x' = x - v t. The active boost by +v therefore carries delta_phase(m, e, -v).
double delta_phase(double m, const Event& e, const Vec3& v);
Complex delta_phase(Complex m, const Event& e, const Vec3& v);

/// Phase Δ_m(x, t; g) of the plain representation, [U(g)ψ](g ▷ e) = exp(iΔ) ψ(e).
/// Defined by factoring g = boost · space translation · time translation;
/// translations contribute no phase.
Complex galilei_phase(Complex m, const Event& e, const GalileiElement& g);

struct CocycleValue
{
  Complex value{1.0, 0.0};
  /// False when |value| != 1, which happens for complex masses.
  bool unimodular = true;
};

/// ω(g, h) with U(g) U(h) = ω(g, h) U(g·h). Evaluated in closed form from the
/// section, independent of any event.
CocycleValue cocycle(const GalileiElement& g, const GalileiElement& h, Complex m);

/// Event form of the cocycle,
/// ω(g, h) = exp(i [Δ(h ▷ e; g) + Δ(e; h) - Δ(e; g·h)]).
/// The composed-element term enters with a minus sign; with all plus signs the
/// result depends on e.
CocycleValue cocycle_at(const GalileiElement& g, const GalileiElement& h, Complex m, const Event& e);

/// Translation by a, boost by v, translation by -a, boost by -v, in the order
/// they are applied: {g1, g2, g3, g4}.
std::array<ExtendedGalileiElement, 4> bargmann_loop_elements(const Vec3& a, const Vec3& v);

/// g4·g3·g2·g1 computed with the extended group law. Equals (a·v, 0, 0, 0).
ExtendedGalileiElement bargmann_loop(const Vec3& a, const Vec3& v);

// ---------------------------------------------------------------------------
// Lie algebra

enum class Generator : int { P1 = 0, P2, P3, C1, C2, C3, H, M };
inline constexpr std::size_t kGeneratorCount = 8;

std::string generator_name(Generator g);

enum class GroupKind { Galilei, Extended };

/// Structure constants c^k_{ij}, [X_i, X_j] = c^k_{ij} X_k, over the basis
/// {P1, P2, P3, C1, C2, C3, H, M}.
class AlgebraTable
{
public:
  using Row = std::array<double, kGeneratorCount>;

  /// [C_i, P_j] = M δ_ij, [C_i, H] = P_i, all other brackets zero.
  static AlgebraTable extended();
  /// Same table with [C_i, P_j] = 0. M is then central and decoupled.
  static AlgebraTable galilei();
  static AlgebraTable of(GroupKind kind);

  double operator()(Generator k, Generator i, Generator j) const;
  Row bracket(Generator i, Generator j) const;

  double max_antisymmetry_violation() const;
  double max_jacobi_violation() const;

private:
  void set(Generator i, Generator j, Generator k, double value);

  std::array<std::array<Row, kGeneratorCount>, kGeneratorCount> c_{}; // c_[i][j][k]
};

/// One-parameter subgroup exp(ε X) as an element of the extended group.
ExtendedGalileiElement one_parameter(Generator x, double epsilon);

/// Bracket extracted from the group law: the group commutator
/// g(ε) h(ε) g(ε)⁻¹ h(ε)⁻¹ = exp(ε² [X, Y] + O(ε³)), symmetrized in ±ε so the
/// leading error is O(ε²).
AlgebraTable::Row numeric_bracket(Generator i, Generator j, GroupKind kind = GroupKind::Extended,
                                  double epsilon = 1e-3);

struct BracketMismatch
{
  Generator i;
  Generator j;
  Generator k;
  double numeric;
  double table;
};

struct AlgebraCheck
{
  double max_error = 0.0;
  std::vector<BracketMismatch> mismatches;
};

AlgebraCheck verify_algebra(GroupKind kind, double tolerance = 1e-6, double epsilon = 1e-3);

// ---------------------------------------------------------------------------
// Lorentz loop

/// Affine map e ↦ L e + shift on (x, y, z, t).
struct AffineMap
{
  Mat4 linear = Mat4::Identity();
  Vec4 shift = Vec4::Zero();

  Event apply(const Event& e) const;
  AffineMap then(const AffineMap& next) const; // next ∘ this
};

/// Active Lorentz boost by velocity v: x' = x + (γ-1)(n·x)n + γ v t,
/// t' = γ (t + v·x / c²). Throws std::invalid_argument when |v| >= c.
AffineMap lorentz_boost(const Vec3& v, double c);
AffineMap spatial_translation(const Vec3& a);

struct LorentzLoopResult
{
  AffineMap exact;
  Vec3 predicted_dx = Vec3::Zero(); // (v·a) v / 2c²
  double predicted_dt = 0.0;        // v·a / c²
  Vec3 exact_dx = Vec3::Zero();
  double exact_dt = 0.0;
  double residual_x = 0.0;          // |exact_dx - predicted_dx|
  double residual_t = 0.0;          // |exact_dt - predicted_dt|
  double linear_deviation = 0.0;    // max |L - I|, zero for a pure translation

  /// sqrt(residual_x² + (c residual_t)²)
  double residual(double c) const;
};

/// Event image of exp(-i v·K) exp(-i a·P) exp(i v·K) exp(i a·P): translate by
/// -a, boost by -v, translate by a, boost by v. The composition is a pure
/// translation; it is compared with the O(1/c²) prediction
/// (x + (v·a) v / 2c², t + v·a / c²).
LorentzLoopResult lorentz_loop(const Vec3& a, const Vec3& v, double c);

} // namespace galilei
