#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "phasetomo/constants.hpp"

namespace phasetomo {

/// Uniform real grid with n sample points spanning [x_min, x_max] inclusive.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n = 0;

    Grid() = default;
    Grid(double x_min_, double x_max_, std::size_t n_);

    double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
    double point(std::size_t k) const { return x_min + static_cast<double>(k) * dx(); }
    std::vector<double> points() const;

    /// Index of the grid point nearest to x (clamped to the grid).
    std::size_t nearest_index(double x) const;

    bool operator==(const Grid& other) const = default;
};

/// Default working grid: wide enough that h_0..h_20 tails are < 1e-14 at the
/// edges and the conjugate grid covers [-pi/dx, pi/dx], which contains
/// [-300, 300].
Grid default_grid();

/// Complex-valued samples on a grid.
struct GridFunction {
    Grid grid;
    std::vector<complex> values;
    bool edge_warning = false; // set by transforms when |f| at the edges is not negligible

    GridFunction() = default;
    GridFunction(Grid g, std::vector<complex> v);
    explicit GridFunction(Grid g);

    std::size_t size() const { return values.size(); }

    double max_abs() const;
    /// L2 norm under grid quadrature, sqrt(sum |f|^2 dx).
    double norm() const;
};

GridFunction tabulate(const Grid& grid, const std::function<complex(double)>& f);
GridFunction tabulate_real(const Grid& grid, const std::function<double(double)>& f);

/// Composite Simpson when the point count is odd, trapezoid otherwise.
complex quadrature(const GridFunction& f);
double quadrature(const Grid& grid, const std::vector<double>& values);

/// Plain Riemann sum (dx-weighted). Exact partner of the unitary discrete
/// Fourier map; the margin-consistency paths rely on it.
complex riemann_sum(const GridFunction& f);

complex inner_product(const GridFunction& a, const GridFunction& b);

/// Cell-averaged sample of the indicator of [a, b] at x for a grid of spacing
/// dx: the overlap fraction of [x - dx/2, x + dx/2] with [a, b]. Equals the
/// midpoint value 1/2 when a jump falls on a grid point, and preserves
/// integrals of the indicator exactly.
double indicator_cell_average(double a, double b, double x, double dx);

} // namespace phasetomo
