#pragma once

#include <stdexcept>
#include <string>

namespace perov {

/// Two objects (matrices, vectors) have incompatible dimensions.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two grid functions live on different grids.
struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix required to be convergent to zero (spectral radius < 1) is not.
struct NotConvergentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a special function.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sample set unusable for Lipschitz estimation (coincident or too few pairs).
struct DegenerateSamples : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// |A_i(x)(t)| dropped below the configured regularity floor during a solve.
struct RegularityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certification formula's precondition fails (e.g. nonpositive denominator).
struct ConditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace perov
