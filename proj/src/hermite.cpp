#include "phasetomo/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "phasetomo/fourier.hpp"

namespace phasetomo {

namespace {

constexpr double quarter_root_pi_inv = 0.7511255444649424828587030047762276930510; // pi^{-1/4}

void check_degree(std::size_t n) {
    if (n > max_hermite_degree)
        throw std::invalid_argument("degree too large");
}

std::vector<double> hermite_column(std::size_t n_max, double x) {
    std::vector<double> h(n_max + 1);
    h[0] = quarter_root_pi_inv * std::exp(-0.5 * x * x);
    if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (std::size_t k = 1; k < n_max; ++k) {
        const double kk = static_cast<double>(k);
        h[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * x * h[k] -
                   std::sqrt(kk / (kk + 1.0)) * h[k - 1];
    }
    return h;
}

} // namespace

double hermite_value(std::size_t n, double x) {
    check_degree(n);
    return hermite_column(n, x)[n];
}

GridFunction hermite_function(std::size_t n, const Grid& grid) {
    check_degree(n);
    GridFunction out(grid);
    for (std::size_t k = 0; k < grid.n; ++k)
        out.values[k] = hermite_value(n, grid.point(k));
    return out;
}

complex hermite_sum(std::span<const complex> coeffs, double x) {
    if (coeffs.empty()) return 0.0;
    const auto h = hermite_column(coeffs.size() - 1, x);
    complex s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * h[k];
    return s;
}

HermiteState::HermiteState(std::vector<complex> c) : coeffs(std::move(c)) {
    check_degree(coeffs.empty() ? 0 : coeffs.size() - 1);
    double norm2 = 0.0;
    for (const auto& v : coeffs) norm2 += std::norm(v);
    if (norm2 <= 0.0)
        throw std::invalid_argument("HermiteState: zero coefficient vector");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& v : coeffs) v *= scale;
}

std::vector<complex> HermiteState::momentum_coeffs() const {
    std::vector<complex> out(coeffs.size());
    complex phase{1.0, 0.0};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out[k] = coeffs[k] * phase;
        phase *= complex{0.0, -1.0}; // F h_n = (-i)^n h_n
    }
    return out;
}

complex HermiteState::momentum_amplitude(double p) const {
    const auto mc = momentum_coeffs();
    return hermite_sum(mc, p);
}

MixedState::MixedState(std::vector<double> w, std::vector<HermiteState> p)
    : weights(std::move(w)), pures(std::move(p)) {
    if (weights.size() != pures.size() || weights.empty())
        throw std::invalid_argument("MixedState: weights/pures mismatch");
    double total = 0.0;
    for (double wk : weights) {
        if (wk < 0.0)
            throw std::invalid_argument("MixedState: negative weight");
        total += wk;
    }
    if (total <= 0.0)
        throw std::invalid_argument("MixedState: zero total weight");
    for (double& wk : weights) wk /= total;
}

MixedState as_mixed(const HermiteState& s) { return MixedState({1.0}, {s}); }

GridFunction state_wavefunction(const HermiteState& s, const Grid& grid) {
    GridFunction out(grid);
    for (std::size_t k = 0; k < grid.n; ++k)
        out.values[k] = s.position_amplitude(grid.point(k));
    return out;
}

double position_density_at(const MixedState& s, double x) {
    double d = 0.0;
    for (std::size_t j = 0; j < s.rank(); ++j)
        d += s.weights[j] * std::norm(s.pures[j].position_amplitude(x));
    return d;
}

double momentum_density_at(const MixedState& s, double p) {
    double d = 0.0;
    for (std::size_t j = 0; j < s.rank(); ++j)
        d += s.weights[j] * std::norm(s.pures[j].momentum_amplitude(p));
    return d;
}

Measure1D position_density(const MixedState& s, const Grid& grid) {
    std::vector<double> d(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) d[k] = position_density_at(s, grid.point(k));
    return Measure1D(grid, std::move(d));
}

Measure1D position_density(const HermiteState& s, const Grid& grid) {
    return position_density(as_mixed(s), grid);
}

Measure1D momentum_density(const MixedState& s, const Grid& grid) {
    std::vector<double> d(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) d[k] = momentum_density_at(s, grid.point(k));
    return Measure1D(grid, std::move(d));
}

Measure1D momentum_density(const HermiteState& s, const Grid& grid) {
    return momentum_density(as_mixed(s), grid);
}

Measure1D position_density(const GridFunction& psi) {
    std::vector<double> d(psi.grid.n);
    for (std::size_t k = 0; k < psi.grid.n; ++k) d[k] = std::norm(psi.values[k]);
    return Measure1D(psi.grid, std::move(d));
}

Measure1D momentum_density(const GridFunction& psi) {
    return position_density(fourier_transform(psi));
}

} // namespace phasetomo
