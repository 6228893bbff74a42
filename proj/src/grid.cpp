#include "perov/grid.hpp"

#include <algorithm>
#include <cmath>

namespace perov {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) {
        throw GridMismatch(std::string(what) + ": functions live on different grids");
    }
}

} // namespace

GridFunction::GridFunction(Grid grid, std::vector<double> samples)
    : grid_(grid), v_(std::move(samples)) {
    if (v_.size() != grid_.points()) {
        throw GridMismatch("GridFunction: sample count must be N+1");
    }
    for (double x : v_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("GridFunction: samples must be finite");
        }
    }
}

GridFunction GridFunction::constant(const Grid& g, double c) {
    return GridFunction(g, std::vector<double>(g.points(), c));
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f.grid(), g.grid(), "GridFunction +");
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f[j] + g[j];
    return GridFunction(f.grid(), std::move(v));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f.grid(), g.grid(), "GridFunction -");
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f[j] - g[j];
    return GridFunction(f.grid(), std::move(v));
}

GridFunction operator*(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f.grid(), g.grid(), "GridFunction *");
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f[j] * g[j];
    return GridFunction(f.grid(), std::move(v));
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (double x : f.values()) m = std::max(m, std::abs(x));
    return m;
}

GridFunction multiply(const GridFunction& f, const GridFunction& g) { return f * g; }

GridFunction add(const GridFunction& f, const GridFunction& g) { return f + g; }

GridFunction scale(double c, const GridFunction& f) {
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * f[j];
    return GridFunction(f.grid(), std::move(v));
}

PairFunction::PairFunction(GridFunction x, GridFunction y)
    : first(std::move(x)), second(std::move(y)) {
    require_same_grid(first.grid(), second.grid(), "PairFunction");
}

OrderedVector pair_norm(const PairFunction& p) {
    return OrderedVector{sup_norm(p.first), sup_norm(p.second)};
}

PairFunction operator+(const PairFunction& a, const PairFunction& b) {
    return {a.first + b.first, a.second + b.second};
}

PairFunction operator-(const PairFunction& a, const PairFunction& b) {
    return {a.first - b.first, a.second - b.second};
}

PairFunction operator*(const PairFunction& a, const PairFunction& b) {
    return {a.first * b.first, a.second * b.second};
}

PairFunction scale(double c, const PairFunction& p) {
    return {scale(c, p.first), scale(c, p.second)};
}

} // namespace perov
