#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "perov/grid.hpp"
#include "perov/matrix.hpp"

namespace perov {

using PairOperator = std::function<PairFunction(const PairFunction&)>;

/// Claimed Lipschitz matrix of an operator on the product space. The matrix
/// must be convergent to zero before iteration is attempted; `verified` says
/// whether the claim has been audited by sampling.
struct ContractionCertificate {
    NonnegMatrix M;
    bool verified = false;
};

/// Outcome of a fixed-point run. step_norms holds the componentwise norm of
/// each step x_{k+1} - x_k (for the outer hybrid solve, the residual vector
/// of each accepted iterate instead). error_bound is the a-posteriori bound
/// (I - M)^{-1} * (last step norm), valid componentwise for the final iterate.
struct FixedPointResult {
    PairFunction point;
    int iterations = 0;
    std::vector<OrderedVector> step_norms;
    OrderedVector error_bound;
    bool converged = false;
    bool radius_exceeded = false;
    std::string message;
};

/// Picard iteration x_{k+1} = T(x_k) under a matrix contraction certificate.
/// Stops when the step norm is componentwise <= tol. Aborts early when any
/// step-norm component grows by more than 10x over 5 consecutive iterations.
/// Throws NotConvergentError when the certificate matrix has rho >= 1; hitting
/// max_iter returns the best iterate with converged = false.
FixedPointResult perov_iterate(const PairOperator& op, const PairFunction& x0,
                               const ContractionCertificate& cert,
                               const OrderedVector& tol, int max_iter);

/// Entrywise-largest quotient matrix consistent with the sampled pairs; a
/// lower bound on any valid Lipschitz matrix of op. Only pairs differing in a
/// single component contribute (they isolate one column); others are skipped.
/// Throws DegenerateSamples for fewer than two pairs or a coincident pair.
NonnegMatrix estimate_lipschitz(
    const PairOperator& op,
    const std::vector<std::pair<PairFunction, PairFunction>>& samples);

} // namespace perov
