#include "perov/gamma.hpp"

#include <cmath>

#include "perov/errors.hpp"

namespace perov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos(double z) {
    // Valid for z >= 0.5; callers shift smaller arguments via the recurrence.
    z -= 1.0;
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const double t = z + kG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

double gamma_fn(double z) {
    if (!(z > 0.0)) {
        throw DomainError("gamma_fn: argument must be > 0");
    }
    if (z < 0.5) {
        // Gamma(z) = Gamma(z+1)/z keeps the Lanczos series on z >= 0.5.
        return lanczos(z + 1.0) / z;
    }
    return lanczos(z);
}

} // namespace perov
