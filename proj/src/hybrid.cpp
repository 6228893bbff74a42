#include "perov/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace perov {

namespace {

void check_regular(const PairFunction& ax, double a_min) {
    auto scan = [a_min](const GridFunction& f, int component) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (std::abs(f[j]) < a_min) {
                std::ostringstream msg;
                msg << "regularity floor violated: |A_" << component << "(x)(t_" << j
                    << ")| = " << std::abs(f[j]) << " < " << a_min;
                throw RegularityViolation(msg.str());
            }
        }
    };
    scan(ax.first, 1);
    scan(ax.second, 2);
}

bool inside_ball(const PairFunction& p, double r0) {
    return vec_leq(pair_norm(p), OrderedVector{r0, r0});
}

} // namespace

NonnegMatrix combined_matrix(const NonnegMatrix& m_a, const NonnegMatrix& m_c,
                             const OrderedVector& b) {
    const std::size_t n = m_a.size();
    if (m_c.size() != n || b.size() != n) {
        throw DimensionMismatch("combined_matrix: dimensions disagree");
    }
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = b[j] * m_a(i, j) + m_c(i, j);
        }
    }
    return NonnegMatrix(n, std::move(e));
}

OrderedVector residual(const HybridProblem& p, const PairFunction& x) {
    return pair_norm(x - (p.A(x) * p.B(x) + p.C(x)));
}

FixedPointResult inner_solve(const HybridProblem& p, const PairFunction& y,
                             const PairFunction& x_init, const OrderedVector& tol,
                             int max_iter) {
    const NonnegMatrix cm = combined_matrix(p.M_A, p.M_C, p.B_norm_bound);
    const PairFunction by = p.B(y);
    const double a_min = p.a_min;
    auto phi = [&p, &by, a_min](const PairFunction& x) {
        PairFunction ax = p.A(x);
        check_regular(ax, a_min);
        return ax * by + p.C(x);
    };
    return perov_iterate(phi, x_init, ContractionCertificate{cm, true}, tol, max_iter);
}

FixedPointResult outer_solve(const HybridProblem& p, const PairFunction& start,
                             const OrderedVector& tol, int max_outer,
                             std::optional<OrderedVector> inner_tol, int max_inner) {
    if (!tol.all_positive()) {
        throw std::invalid_argument("outer_solve: tolerance must be positive componentwise");
    }
    if (max_outer < 1) {
        throw std::invalid_argument("outer_solve: max_outer must be >= 1");
    }
    OrderedVector itol = inner_tol.value_or(0.01 * tol);
    for (std::size_t i = 0; i < itol.size(); ++i) itol[i] = std::max(itol[i], 1e-14);

    FixedPointResult res{start};
    OrderedVector r = residual(p, res.point);
    res.step_norms.push_back(r);
    res.radius_exceeded = !inside_ball(res.point, p.r0);

    PairFunction best = res.point;
    double best_max = r.max();
    int stalls = 0;

    for (int k = 1; k <= max_outer; ++k) {
        if (vec_leq(r, tol)) {
            res.converged = true;
            break;
        }
        // Warm start: the inner contraction makes the start irrelevant for
        // correctness, and the previous outer iterate is already close.
        const PairFunction x_inner = inner_solve(p, res.point, res.point, itol, max_inner).point;

        PairFunction candidate = x_inner;
        OrderedVector cand_r = residual(p, candidate);
        if (!(cand_r.max() < r.max())) {
            for (double lam : {0.5, 0.25}) {
                PairFunction damped = scale(1.0 - lam, res.point) + scale(lam, x_inner);
                OrderedVector damped_r = residual(p, damped);
                if (damped_r.max() < cand_r.max()) {
                    candidate = std::move(damped);
                    cand_r = damped_r;
                }
            }
        }
        if (!(cand_r.max() < r.max())) {
            if (++stalls >= 5) {
                res.message = "no convergence: residual stalled";
                break;
            }
        } else {
            stalls = 0;
        }

        res.point = std::move(candidate);
        r = cand_r;
        res.iterations = k;
        res.step_norms.push_back(r);
        if (!inside_ball(res.point, p.r0)) res.radius_exceeded = true;
        if (r.max() < best_max) {
            best = res.point;
            best_max = r.max();
        }
    }

    if (!res.converged && vec_leq(r, tol)) res.converged = true;
    if (!res.converged) {
        res.point = best;
        r = residual(p, res.point);
        if (res.message.empty()) res.message = "no convergence: max outer iterations reached";
    }
    res.error_bound = r;
    return res;
}

} // namespace perov
