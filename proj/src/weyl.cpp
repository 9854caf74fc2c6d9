#include "phasetomo/weyl.hpp"

#include <cmath>
#include <stdexcept>

#include "phasetomo/fourier.hpp"

namespace phasetomo {

namespace {

// Numerical support [lo, hi] of |f| at a relative threshold.
std::pair<double, double> support_of(const GridFunction& f, double rel_tol) {
    const double thresh = rel_tol * f.max_abs();
    std::size_t first = 0, last = f.grid.n - 1;
    while (first < f.grid.n && std::abs(f.values[first]) <= thresh) ++first;
    while (last > 0 && std::abs(f.values[last]) <= thresh) --last;
    if (first > last) return {f.grid.x_min, f.grid.x_min};
    return {f.grid.point(first), f.grid.point(last)};
}

} // namespace

GridFunction weyl_apply(double q, double p, const GridFunction& psi) {
    constexpr double support_tol = 1e-12;
    const Grid& g = psi.grid;

    const auto [lo, hi] = support_of(psi, support_tol);
    if (lo + q < g.x_min - 0.5 * g.dx() || hi + q > g.x_max + 0.5 * g.dx())
        throw std::invalid_argument("shift exceeds grid margin");

    // modulate: e^{ipx} psi(x)
    GridFunction mod(g);
    for (std::size_t k = 0; k < g.n; ++k)
        mod.values[k] = psi.values[k] * std::polar(1.0, p * g.point(k));

    // translate by q through the spectrum; the modulation shifted the band by
    // p, so significant spectral mass at the band edge means wrap-around
    GridFunction spec = fourier_transform(mod);
    const auto [blo, bhi] = support_of(spec, support_tol);
    if (blo <= spec.grid.x_min + 0.5 * spec.grid.dx() ||
        bhi >= spec.grid.x_max - 0.5 * spec.grid.dx())
        throw std::invalid_argument("shift exceeds grid margin");
    for (std::size_t j = 0; j < spec.grid.n; ++j)
        spec.values[j] *= std::polar(1.0, -spec.grid.point(j) * q);

    GridFunction out = inverse_fourier_transform(spec, g);
    const complex front = std::polar(1.0, 0.5 * q * p);
    for (auto& v : out.values) v *= front;
    return out;
}

} // namespace phasetomo
