#include "phasetomo/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace phasetomo {

namespace {

// FFTW planning is not thread safe; executing distinct buffers through a
// cached plan is. Plans are created FFTW_UNALIGNED so they accept any buffer.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(std::vector<complex>& data, int sign) {
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(data.size(), sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<complex> scratch(data.size());
                auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr,
                                        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
        fftw_execute_dft(plan, ptr, ptr);
    }

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

double p_min_of(const Grid& g) {
    const double dp = two_pi / (static_cast<double>(g.n) * g.dx());
    const auto half = static_cast<double>(g.n / 2);
    return -half * dp;
}

void check_conjugate_pair(const Grid& a, const Grid& b) {
    if (a.n != b.n)
        throw std::invalid_argument("fourier: grids must have equal point count");
    const double prod = a.dx() * b.dx() * static_cast<double>(a.n);
    if (std::abs(prod - two_pi) > 1e-9 * two_pi)
        throw std::invalid_argument("fourier: grids are not a conjugate pair (dx*dp != 2pi/n)");
}

} // namespace

void raw_dft(std::vector<complex>& data, int sign) {
    PlanCache::instance().execute(data, sign);
}

Grid conjugate_grid(const Grid& grid) {
    const double dp = two_pi / (static_cast<double>(grid.n) * grid.dx());
    const double p_min = p_min_of(grid);
    return Grid(p_min, p_min + dp * static_cast<double>(grid.n - 1), grid.n);
}

GridFunction fourier_transform(const GridFunction& f) {
    const Grid& xg = f.grid;
    const Grid pg = conjugate_grid(xg);
    const std::size_t n = xg.n;
    const double dx = xg.dx();
    const double p_min = pg.x_min;

    std::vector<complex> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phase = -p_min * static_cast<double>(k) * dx;
        a[k] = f.values[k] * std::polar(1.0, phase);
    }
    raw_dft(a, -1);

    GridFunction out(pg);
    const double scale = dx * inv_sqrt_two_pi;
    for (std::size_t j = 0; j < n; ++j) {
        const double pj = pg.point(j);
        out.values[j] = scale * std::polar(1.0, -pj * xg.x_min) * a[j];
    }

    const double edge = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    out.edge_warning = edge > 1e-10 * f.max_abs();
    return out;
}

GridFunction inverse_fourier_transform(const GridFunction& g, const Grid& target) {
    check_conjugate_pair(g.grid, target);
    const std::size_t n = g.grid.n;
    const double dp = g.grid.dx();
    const double p_min = g.grid.x_min;

    std::vector<complex> b(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = static_cast<double>(j) * dp * target.x_min;
        b[j] = g.values[j] * std::polar(1.0, phase);
    }
    raw_dft(b, +1);

    GridFunction out(target);
    const double scale = dp * inv_sqrt_two_pi;
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = scale * std::polar(1.0, p_min * target.point(k)) * b[k];
    return out;
}

GridFunction inverse_fourier_transform(const GridFunction& g) {
    return inverse_fourier_transform(g, conjugate_grid(g.grid));
}

GridFunction translate(const GridFunction& f, double q) {
    GridFunction spec = fourier_transform(f);
    for (std::size_t j = 0; j < spec.grid.n; ++j)
        spec.values[j] *= std::polar(1.0, -spec.grid.point(j) * q);
    GridFunction out = inverse_fourier_transform(spec, f.grid);
    out.edge_warning = spec.edge_warning;
    return out;
}

} // namespace phasetomo
