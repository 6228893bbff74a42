#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "perov/errors.hpp"
#include "perov/matrix.hpp"

namespace perov {

/// Uniform grid t_j = j*T/N on [0, T].
struct Grid {
    double T = 1.0;
    std::size_t N = 1;

    Grid() = default;
    Grid(double right_endpoint, std::size_t subintervals)
        : T(right_endpoint), N(subintervals) {
        if (!(T > 0.0) || !std::isfinite(T)) {
            throw std::invalid_argument("Grid: T must be finite and > 0");
        }
        if (N < 1) throw std::invalid_argument("Grid: N must be >= 1");
    }

    double step() const { return T / static_cast<double>(N); }
    double node(std::size_t j) const { return T * static_cast<double>(j) / static_cast<double>(N); }
    std::size_t points() const { return N + 1; }

    bool operator==(const Grid& other) const { return T == other.T && N == other.N; }
};

/// Real-valued function sampled at the nodes of a uniform grid; the discrete
/// stand-in for an element of C([0,T]).
class GridFunction {
  public:
    GridFunction(Grid grid, std::vector<double> samples);

    static GridFunction zero(const Grid& g) { return constant(g, 0.0); }
    static GridFunction constant(const Grid& g, double c);

    template <typename F>
    static GridFunction sample(const Grid& g, F&& f) {
        std::vector<double> v(g.points());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(g.node(j));
        return GridFunction(g, std::move(v));
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t j) const { return v_[j]; }
    const std::vector<double>& values() const { return v_; }

    friend GridFunction operator+(const GridFunction& f, const GridFunction& g);
    friend GridFunction operator-(const GridFunction& f, const GridFunction& g);
    friend GridFunction operator*(const GridFunction& f, const GridFunction& g); // pointwise

  private:
    Grid grid_;
    std::vector<double> v_;
};

/// Discrete sup-norm: max_j |f(t_j)|.
double sup_norm(const GridFunction& f);

/// Pointwise product (same as operator*).
GridFunction multiply(const GridFunction& f, const GridFunction& g);

GridFunction add(const GridFunction& f, const GridFunction& g);

GridFunction scale(double c, const GridFunction& f);

/// Pair (x, y) of grid functions on one shared grid; element of the product
/// space with the 2-component vector norm.
struct PairFunction {
    GridFunction first;
    GridFunction second;

    PairFunction(GridFunction x, GridFunction y);

    static PairFunction zero(const Grid& g) {
        return {GridFunction::zero(g), GridFunction::zero(g)};
    }

    const Grid& grid() const { return first.grid(); }
};

/// Vector norm (||x||_inf, ||y||_inf) of the product space.
OrderedVector pair_norm(const PairFunction& p);

PairFunction operator+(const PairFunction& a, const PairFunction& b);
PairFunction operator-(const PairFunction& a, const PairFunction& b);
/// Componentwise algebra product (x1*y1, x2*y2).
PairFunction operator*(const PairFunction& a, const PairFunction& b);
PairFunction scale(double c, const PairFunction& p);

} // namespace perov
