#pragma once

#include "phasetomo/grid.hpp"

namespace phasetomo {

/// Conjugate (frequency) grid of a sample grid: same point count n, spacing
/// dp = 2*pi / (n*dx), centered at zero. For odd n the grid is symmetric.
Grid conjugate_grid(const Grid& grid);

/// Continuum-convention transform fhat(p) = (1/sqrt(2 pi)) Int e^{-ipx} f(x) dx,
/// realised by an FFT with pre/post phase ramps so the result is the exact
/// rectangle-rule value of that integral on the conjugate grid. The discrete
/// map is unitary: ||fhat||_2 == ||f||_2 to machine precision.
///
/// Sets edge_warning on the result when |f| at the grid edges exceeds
/// 1e-10 * max|f|.
GridFunction fourier_transform(const GridFunction& f);

/// Inverse of fourier_transform onto conjugate_grid(g.grid).
GridFunction inverse_fourier_transform(const GridFunction& g);

/// Inverse onto an explicit target grid; target spacing must satisfy
/// dx * dp = 2*pi/n (any offset is allowed, handled by phase ramps).
GridFunction inverse_fourier_transform(const GridFunction& g, const Grid& target);

/// f(x - q) for band-limited f, via a spectral phase ramp (exact fractional
/// shift). Content pushed past the grid edge wraps around; callers guard
/// against that (see weyl_apply).
GridFunction translate(const GridFunction& f, double q);

/// Unnormalized in-place DFT, sign = -1 forward / +1 backward (FFTW wrapped
/// behind a mutex-guarded plan cache; safe to call from concurrent workers).
void raw_dft(std::vector<complex>& data, int sign);

} // namespace phasetomo
