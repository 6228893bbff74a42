#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "perov/grid.hpp"
#include "perov/matrix.hpp"

namespace perov::test {

// Deterministic uniform [0,1) from the top 53 bits of the generator, so the
// streams match across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline NonnegMatrix random_nonneg(std::mt19937_64& rng, std::size_t n, double max_entry) {
    std::vector<double> e(n * n);
    for (double& x : e) x = uniform(rng, 0.0, max_entry);
    return NonnegMatrix(n, std::move(e));
}

inline GridFunction random_function(std::mt19937_64& rng, const Grid& g, double amplitude) {
    std::vector<double> v(g.points());
    for (double& x : v) x = uniform(rng, -amplitude, amplitude);
    return GridFunction(g, std::move(v));
}

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace perov::test
