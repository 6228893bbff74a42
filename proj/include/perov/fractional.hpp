#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "perov/grid.hpp"

namespace perov {

/// Fractional integration order alpha > 0.
struct FracOrder {
    double alpha;

    explicit FracOrder(double a) : alpha(a) {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw std::invalid_argument("FracOrder: alpha must be finite and > 0");
        }
    }
};

/// Quadrature weights of the order-alpha integral with kernel
/// (t - s)^(alpha-1)/Gamma(alpha) on a uniform grid. Row n holds the exact
/// integrals of the piecewise-linear hat functions against the kernel up to
/// t_n, so applying a row is exact (to rounding) for piecewise-linear data.
class RLWeights {
  public:
    RLWeights(Grid grid, FracOrder order);

    const Grid& grid() const { return grid_; }
    double alpha() const { return alpha_; }

    /// (I^alpha f)(t_n) for every node; f must live on the construction grid.
    GridFunction apply(const GridFunction& f) const;

    /// Weight of node j in row n (j <= n); rows are lower triangular.
    double weight(std::size_t n, std::size_t j) const { return rows_[n][j]; }
    double row_sum(std::size_t n) const;
    double min_weight() const;

  private:
    Grid grid_;
    double alpha_;
    std::vector<std::vector<double>> rows_; // row n has n+1 entries
};

/// Convenience wrapper: builds the weight table for f's grid and applies it.
GridFunction rl_integral(const GridFunction& f, FracOrder order);

} // namespace perov
