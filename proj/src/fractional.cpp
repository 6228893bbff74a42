#include "perov/fractional.hpp"

#include <algorithm>
#include <cmath>

#include "perov/gamma.hpp"

namespace perov {

RLWeights::RLWeights(Grid grid, FracOrder order)
    : grid_(grid), alpha_(order.alpha), rows_(grid.points()) {
    const double a = alpha_;
    const double h = grid_.step();
    const double inv_gamma = 1.0 / gamma_fn(a);
    const std::size_t n_rows = grid_.points();

    // Interval moments against the kernel (t_n - s)^(a-1), with u = t_n - s:
    //   m0 = integral of u^(a-1)            over [lo, hi]
    //   m1 = integral of u^(a-1) * (hi - u) over [lo, hi]
    // where hi = t_n - t_j and lo = t_n - t_{j+1}. Interpolating f linearly on
    // [t_j, t_{j+1}] then contributes (m0 - m1/h) to node j and m1/h to j+1.
    rows_[0] = {0.0};
    for (std::size_t n = 1; n < n_rows; ++n) {
        std::vector<double>& w = rows_[n];
        w.assign(n + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double hi = static_cast<double>(n - j) * h;
            const double lo = static_cast<double>(n - j - 1) * h;
            const double pa = std::pow(hi, a) - std::pow(lo, a);
            const double pa1 = std::pow(hi, a + 1.0) - std::pow(lo, a + 1.0);
            const double m0 = pa / a;
            const double m1 = hi * m0 - pa1 / (a + 1.0);
            w[j] += (m0 - m1 / h) * inv_gamma;
            w[j + 1] += (m1 / h) * inv_gamma;
        }
    }
}

GridFunction RLWeights::apply(const GridFunction& f) const {
    if (!(f.grid() == grid_)) {
        throw GridMismatch("RLWeights::apply: function grid differs from weight grid");
    }
    std::vector<double> out(grid_.points(), 0.0);
    for (std::size_t n = 1; n < out.size(); ++n) {
        const std::vector<double>& w = rows_[n];
        double s = 0.0;
        for (std::size_t j = 0; j <= n; ++j) s += w[j] * f[j];
        out[n] = s;
    }
    return GridFunction(grid_, std::move(out));
}

double RLWeights::row_sum(std::size_t n) const {
    double s = 0.0;
    for (double w : rows_[n]) s += w;
    return s;
}

double RLWeights::min_weight() const {
    double m = 0.0;
    for (const auto& row : rows_) {
        for (double w : row) m = std::min(m, w);
    }
    return m;
}

GridFunction rl_integral(const GridFunction& f, FracOrder order) {
    return RLWeights(f.grid(), order).apply(f);
}

} // namespace perov
