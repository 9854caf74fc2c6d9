#pragma once

#include <optional>
#include <vector>

#include "phasetomo/grid.hpp"

namespace phasetomo {

/// Probability density sampled on a grid. `spectrum`, when present, caches the
/// unitary Fourier transform of the density on conjugate_grid(grid); pipelines
/// that build a measure spectrally keep it so later stages do not lose the
/// deep-tail part of the transform to FFT roundoff.
struct Measure1D {
    Grid grid;
    std::vector<double> density;
    std::optional<std::vector<complex>> spectrum;

    Measure1D() = default;
    Measure1D(Grid g, std::vector<double> d);

    double mass() const;
    double min_value() const;

    /// Unitary FT of the density: cached spectrum when present, else computed.
    std::vector<complex> fourier() const;
};

double l1_distance(const Measure1D& a, const Measure1D& b);

} // namespace phasetomo
