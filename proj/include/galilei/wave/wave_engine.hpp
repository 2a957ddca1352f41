#pragma once

// Representation of the extended group on mass-channel states and the
// dynamical checks built on it.

#include "galilei/group_kernel.hpp"
#include "galilei/wave/grid.hpp"
#include "galilei/wave/potential.hpp"
#include "galilei/wave/state.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace galilei {

/// Unitary action of the extended group. Channel k of mass m transforms as a
/// scalar on (x, t, s) with the factor exp(-i m s):
///
///   ψ'_k(g ▷ (x, t)) = exp(i m (b_m + v x + v² t / 2)) ψ_k(x, t).
///
/// The translation by v t + a is done spectrally, the phase pointwise. A time
/// shift b only relabels the snapshot time (ψ_b(x, t + b) = ψ(x, t)), which
/// is a symmetry only without a potential; b != 0 together with a nonzero
/// potential throws std::invalid_argument. Elements must act along the grid
/// axis: nonzero y or z components of a or v throw.
SuperposedState apply_unitary(const ExtendedGalileiElement& g, const SuperposedState& state,
                              const Potential& potential = Potential::zero());

/// Projective action of the plain group, U(g) = Ũ(section(g)).
SuperposedState apply_unitary(const GalileiElement& g, const SuperposedState& state,
                              const Potential& potential = Potential::zero());

/// Strang split-step evolution of every channel under
/// i∂_t ψ = (m c² - ∇²/2m + V) ψ: half potential step, exact kinetic and
/// rest-energy step, half potential step. Second order in dt; the potential
/// is sampled at the midpoint of each step. Complex masses enter through m
/// and 1/m directly, without renormalization. Throws std::invalid_argument on
/// non-finite potential samples.
SuperposedState propagate(const SuperposedState& state, const Potential& potential, double dt, std::size_t steps,
                          double c);

// ---------------------------------------------------------------------------
// Five dimensional Schrödinger equation on mass channels

/// ∂_s acting on the channel factor exp(-i m s).
std::complex<double> s_derivative_factor(std::complex<double> mass);
/// ∂_s⁻¹ on the same factor, i/m.
std::complex<double> inverse_s_derivative_factor(std::complex<double> mass);

struct Sch5Report
{
  double residual = 0.0;
  double state_norm = 0.0;
  double relative_residual = 0.0;
  std::vector<double> channel_residuals;
  double time = 0.0; // where the time derivative is centred
};

/// Residual of i∂_t ψ = (i c² ∂_s - (1/2i) ∂_s⁻¹ ∇² + V) ψ with ∂_s and ∂_s⁻¹
/// realized channel-wise. The time derivative is the central difference of
/// propagate output over one step on each side of t + dt; spatial
/// derivatives are spectral. Throws std::invalid_argument when any |m_k| is
/// below mass_floor.
Sch5Report reduce_sch5(const SuperposedState& state, const Potential& potential, double dt, double c,
                       double mass_floor = 1e-6);

/// Residual of the ordinary one-mass Schrödinger equation evaluated the same
/// way; reduce_sch5 must agree with it on a single channel.
Sch5Report schrodinger_residual(const SuperposedState& state, const Potential& potential, double dt, double c);

// ---------------------------------------------------------------------------
// Bargmann loop and densities

enum class LoopGroup { Extended, Galilei };

struct LoopResult
{
  SuperposedState state;
  /// ⟨ψ_k, ψ'_k⟩ / ⟨ψ_k, ψ_k⟩ for each channel.
  std::vector<std::complex<double>> phases;
  /// exp(i m_k a v)
  std::vector<std::complex<double>> expected;
  double max_phase_error = 0.0;
};

/// Applies translation(a), boost(v), translation(-a), boost(-v) in turn with
/// apply_unitary. With LoopGroup::Galilei the plain elements are used; the
/// composed element is then the identity even though the state picks up the
/// phases.
LoopResult bargmann_loop_apply(const SuperposedState& state, double a, double v,
                               LoopGroup group = LoopGroup::Extended);

/// |Σ_k exp(-i m_k s) ψ_k(x)|²
std::vector<double> coherent_density(const SuperposedState& state, double s);
/// Σ_k |ψ_k(x)|², the s-average of the coherent density.
std::vector<double> s_averaged_density(const SuperposedState& state);

struct ComplexBoostReport
{
  std::vector<double> positions;      // grid points where the ratio is resolved
  std::vector<double> ratio;          // |ψ'(x - v t)|² / |ψ(x)|²
  std::vector<double> expected;       // exp(-2 Im Δ)
  double max_relative_error = 0.0;
  double log_slope = 0.0;             // d ln(ratio)/dx from a least-squares fit
  std::size_t channel = 0;
};

/// Change to the frame moving with velocity v (the boost part of apply_unitary
/// with -v) on the first channel, compared at corresponding points
/// x' = x - v t. Only points with |ψ|² ≥ density_floor · max|ψ|² are
/// compared.
ComplexBoostReport boost_complex_mass(const SuperposedState& state, double v, double density_floor = 1e-10);

// ---------------------------------------------------------------------------
// Uniformly accelerated frame

/// Cubic coefficient of the accelerated-frame phase in source coordinates,
/// m (g t x + κ g² t³). Confirmed by validate_cubic_coefficient.
inline constexpr double kAccelerationCubicCoefficient = 1.0 / 3.0;

/// x' = x + g t²/2 together with the phase exp(i m (g t x + κ g² t³)) at the
/// snapshot time. Real masses only; throws std::invalid_argument for a
/// nonzero source potential or a complex mass.
SuperposedState to_accelerated_frame(const SuperposedState& state, const Potential& source_potential, double g,
                                     double kappa = kAccelerationCubicCoefficient);

struct AcceleratedResidual
{
  double residual = 0.0;
  double relative_residual = 0.0;
  Field pointwise; // i∂_t ψ' - H' ψ'
};

/// Residual of i∂_t ψ' = (m c² - ∇'²/2m - m g x') ψ' for the transformed free
/// evolution of `source` (given at its snapshot time), using a central
/// difference of half-width fd_step.
AcceleratedResidual accelerated_frame_residual(const SuperposedState& source, double g, double kappa, double c,
                                               double fd_step);

struct CubicCoefficientReport
{
  double kappa = 0.0;                 // fitted coefficient
  double residual_at_kappa = 0.0;     // relative residual at the fit
  std::vector<double> candidates;
  std::vector<double> residuals;      // relative residual at each candidate
  double reference = kAccelerationCubicCoefficient;
  double deviation = 0.0;             // |kappa - reference|
};

/// Determines κ by least squares on the residual, which is affine in κ to
/// O(fd_step²), and records the residual curve over `candidates`.
CubicCoefficientReport validate_cubic_coefficient(const SuperposedState& source, double g, double c, double fd_step,
                                                  std::vector<double> candidates);

// ---------------------------------------------------------------------------
// Relativistic remnant

struct RemnantReport
{
  double time_shift = 0.0;     // exact Lorentz t' - t
  double exact_phase = 0.0;    // m c² (t' - t)
  double delta_phase = 0.0;    // m (v² t/2 - v·x)
  double residual = 0.0;       // exact_phase - delta_phase
  double relative = 0.0;       // |residual| / |delta_phase|
};

/// Compares m c² (t' - t) for the frame moving with velocity v,
/// t' = γ (t - v·x / c²), with Δ_m. Throws std::invalid_argument when |v| >= c.
RemnantReport remnant_phase_check(const Vec3& v, double c, const Event& e, double m = 1.0);

// ---------------------------------------------------------------------------

/// CSV snapshot: column x, then Re and Im of every channel, named by mass.
void write_snapshot_csv(std::ostream& out, const SuperposedState& state);

} // namespace galilei
