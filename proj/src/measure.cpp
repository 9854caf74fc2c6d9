#include "phasetomo/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phasetomo/fourier.hpp"

namespace phasetomo {

Measure1D::Measure1D(Grid g, std::vector<double> d)
    : grid(g), density(std::move(d)) {
    if (density.size() != grid.n)
        throw std::invalid_argument("Measure1D: density size does not match grid");
}

double Measure1D::mass() const { return quadrature(grid, density); }

double Measure1D::min_value() const {
    return *std::min_element(density.begin(), density.end());
}

std::vector<complex> Measure1D::fourier() const {
    if (spectrum) return *spectrum;
    GridFunction f(grid);
    for (std::size_t k = 0; k < grid.n; ++k) f.values[k] = density[k];
    return fourier_transform(f).values;
}

double l1_distance(const Measure1D& a, const Measure1D& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("l1_distance: measures live on different grids");
    std::vector<double> diff(a.grid.n);
    for (std::size_t k = 0; k < a.grid.n; ++k)
        diff[k] = std::abs(a.density[k] - b.density[k]);
    return quadrature(a.grid, diff);
}

} // namespace phasetomo
