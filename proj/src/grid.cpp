#include "phasetomo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasetomo {

Grid::Grid(double x_min_, double x_max_, std::size_t n_)
    : x_min(x_min_), x_max(x_max_), n(n_) {
    if (!(x_min < x_max))
        throw std::invalid_argument("Grid: x_min must be < x_max");
    if (n < 2)
        throw std::invalid_argument("Grid: need at least 2 points");
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n);
    for (std::size_t k = 0; k < n; ++k) xs[k] = point(k);
    return xs;
}

std::size_t Grid::nearest_index(double x) const {
    const double t = (x - x_min) / dx();
    const long k = std::lround(t);
    if (k < 0) return 0;
    if (k >= static_cast<long>(n)) return n - 1;
    return static_cast<std::size_t>(k);
}

Grid default_grid() { return Grid(-20.0, 20.0, 4097); }

GridFunction::GridFunction(Grid g, std::vector<complex> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
        throw std::invalid_argument("GridFunction: value count does not match grid");
}

GridFunction::GridFunction(Grid g) : grid(g), values(g.n, complex{0.0, 0.0}) {}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s * grid.dx());
}

GridFunction tabulate(const Grid& grid, const std::function<complex(double)>& f) {
    GridFunction out(grid);
    for (std::size_t k = 0; k < grid.n; ++k) out.values[k] = f(grid.point(k));
    return out;
}

GridFunction tabulate_real(const Grid& grid, const std::function<double(double)>& f) {
    GridFunction out(grid);
    for (std::size_t k = 0; k < grid.n; ++k) out.values[k] = complex{f(grid.point(k)), 0.0};
    return out;
}

complex quadrature(const GridFunction& f) {
    const std::size_t n = f.grid.n;
    const double dx = f.grid.dx();
    if (n % 2 == 1) {
        // composite Simpson over the n-1 (even) intervals
        complex s = f.values[0] + f.values[n - 1];
        for (std::size_t k = 1; k < n - 1; ++k)
            s += f.values[k] * ((k % 2 == 1) ? 4.0 : 2.0);
        return s * (dx / 3.0);
    }
    complex s = 0.5 * (f.values[0] + f.values[n - 1]);
    for (std::size_t k = 1; k < n - 1; ++k) s += f.values[k];
    return s * dx;
}

double quadrature(const Grid& grid, const std::vector<double>& values) {
    if (values.size() != grid.n)
        throw std::invalid_argument("quadrature: value count does not match grid");
    const std::size_t n = grid.n;
    const double dx = grid.dx();
    if (n % 2 == 1) {
        double s = values[0] + values[n - 1];
        for (std::size_t k = 1; k < n - 1; ++k)
            s += values[k] * ((k % 2 == 1) ? 4.0 : 2.0);
        return s * (dx / 3.0);
    }
    double s = 0.5 * (values[0] + values[n - 1]);
    for (std::size_t k = 1; k < n - 1; ++k) s += values[k];
    return s * dx;
}

complex riemann_sum(const GridFunction& f) {
    complex s = 0.0;
    for (const auto& v : f.values) s += v;
    return s * f.grid.dx();
}

complex inner_product(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("inner_product: grids differ");
    GridFunction prod(a.grid);
    for (std::size_t k = 0; k < a.grid.n; ++k)
        prod.values[k] = std::conj(a.values[k]) * b.values[k];
    return quadrature(prod);
}

double indicator_cell_average(double a, double b, double x, double dx) {
    const double lo = std::max(a, x - 0.5 * dx);
    const double hi = std::min(b, x + 0.5 * dx);
    return hi > lo ? (hi - lo) / dx : 0.0;
}

} // namespace phasetomo
