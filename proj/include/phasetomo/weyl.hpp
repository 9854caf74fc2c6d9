#pragma once

#include "phasetomo/grid.hpp"

namespace phasetomo {

/// (W(q,p) psi)(x) = e^{i q p / 2} e^{i p (x - q)} psi(x - q).
///
/// The translation by q is a spectral phase ramp, exact for band-limited
/// functions. Throws "shift exceeds grid margin" when the shift would push the
/// numerical support of psi (in x or in frequency) past the grid, where the
/// FFT would wrap it around.
GridFunction weyl_apply(double q, double p, const GridFunction& psi);

} // namespace phasetomo
