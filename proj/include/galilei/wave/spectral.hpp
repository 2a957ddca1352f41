#pragma once

// FFT helpers on Grid1D. Plans are cached per size behind a mutex and executed
// with the new-array interface, so calls on distinct fields may run
// concurrently.

#include "galilei/wave/grid.hpp"

namespace galilei::spectral {

/// Unnormalized forward DFT, ĉ_j = Σ_l f_l exp(-2πi jl/n).
Field forward(const Field& f);
/// Inverse of forward (includes the 1/n).
Field inverse(const Field& coefficients);

/// f(x - d), exact for band-limited periodic fields.
Field translate(const Grid1D& grid, const Field& f, double d);

/// ∂²f/∂x² by spectral differentiation.
Field laplacian(const Grid1D& grid, const Field& f);

} // namespace galilei::spectral
