#pragma once

#include <span>
#include <vector>

#include "phasetomo/grid.hpp"
#include "phasetomo/measure.hpp"

namespace phasetomo {

/// Largest Hermite-function degree the three-term recurrence on function
/// values is trusted for.
inline constexpr std::size_t max_hermite_degree = 200;

/// Hermite function h_n at a single point, by the normalized recurrence
/// h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1} on function values
/// (never on raw Hermite polynomials, which overflow long before n = 200).
double hermite_value(std::size_t n, double x);

/// h_n sampled on a grid. Throws "degree too large" for n > 200.
GridFunction hermite_function(std::size_t n, const Grid& grid);

/// sum_k coeffs[k] h_k(x).
complex hermite_sum(std::span<const complex> coeffs, double x);

/// Finite vector in the Hermite basis, normalized so sum |c_k|^2 = 1.
struct HermiteState {
    std::vector<complex> coeffs;

    HermiteState() = default;
    explicit HermiteState(std::vector<complex> c);

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    complex position_amplitude(double x) const { return hermite_sum(coeffs, x); }
    complex momentum_amplitude(double p) const;

    /// Coefficients of the Fourier-transformed state: F h_n = (-i)^n h_n.
    std::vector<complex> momentum_coeffs() const;
};

/// Finite convex mixture of Hermite-basis pure states.
struct MixedState {
    std::vector<double> weights;
    std::vector<HermiteState> pures;

    MixedState() = default;
    MixedState(std::vector<double> w, std::vector<HermiteState> p);

    std::size_t rank() const { return pures.size(); }
};

MixedState as_mixed(const HermiteState& s);

GridFunction state_wavefunction(const HermiteState& s, const Grid& grid);

Measure1D position_density(const HermiteState& s, const Grid& grid);
Measure1D position_density(const MixedState& s, const Grid& grid);
double position_density_at(const MixedState& s, double x);

/// Momentum densities use the analytic coefficient rotation, not an FFT, so
/// h_n has exactly the same position and momentum density.
Measure1D momentum_density(const HermiteState& s, const Grid& grid);
Measure1D momentum_density(const MixedState& s, const Grid& grid);
double momentum_density_at(const MixedState& s, double p);

/// Densities of a raw grid wavefunction (momentum side goes through the FFT).
Measure1D position_density(const GridFunction& psi);
Measure1D momentum_density(const GridFunction& psi);

} // namespace phasetomo
