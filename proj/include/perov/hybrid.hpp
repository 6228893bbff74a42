#pragma once

#include <optional>

#include "perov/fixed_point.hpp"

namespace perov {

/// The operator triple of the hybrid equation x = Ax*Bx + Cx on the product
/// space, together with its contraction data and the working ball radius r0.
/// A must stay bounded away from zero on every iterate (regularity floor
/// a_min, checked at runtime while solving).
struct HybridProblem {
    PairOperator A;
    PairOperator B;
    PairOperator C;
    NonnegMatrix M_A{2};
    NonnegMatrix M_C{2};
    OrderedVector B_norm_bound{0.0, 0.0};
    double r0 = 1.0;
    double a_min = 1e-8;
};

/// Lipschitz certificate of the frozen-argument inner map
/// phi_y(x) = Ax*By + Cx: entry (i,j) = b_j * M_A(i,j) + M_C(i,j).
NonnegMatrix combined_matrix(const NonnegMatrix& m_a, const NonnegMatrix& m_c,
                             const OrderedVector& b);

/// Componentwise norm of x - (Ax*Bx + Cx).
OrderedVector residual(const HybridProblem& p, const PairFunction& x);

/// Unique fixed point of phi_y for frozen y, computed by perov_iterate under
/// the combined-matrix certificate. Throws RegularityViolation when |A_i|
/// drops below a_min at any node of any iterate.
FixedPointResult inner_solve(const HybridProblem& p, const PairFunction& y,
                             const PairFunction& x_init, const OrderedVector& tol,
                             int max_iter = 200);

/// Outer iteration y_{k+1} = inner_solve(y_k), accepted by residual only.
/// When a plain step does not reduce the residual, the step is damped
/// (blend factors 1, 1/2, 1/4) and the best candidate is kept. Leaves of the
/// r0 ball set radius_exceeded (a flag, not an abort). Failure to reach tol
/// returns the best iterate with converged = false.
FixedPointResult outer_solve(const HybridProblem& p, const PairFunction& start,
                             const OrderedVector& tol, int max_outer,
                             std::optional<OrderedVector> inner_tol = std::nullopt,
                             int max_inner = 200);

} // namespace perov
