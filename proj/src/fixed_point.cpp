#include "perov/fixed_point.hpp"

#include <cmath>

namespace perov {

FixedPointResult perov_iterate(const PairOperator& op, const PairFunction& x0,
                               const ContractionCertificate& cert,
                               const OrderedVector& tol, int max_iter) {
    if (!is_convergent_to_zero(cert.M)) {
        throw NotConvergentError("perov_iterate: certificate matrix has spectral radius >= 1");
    }
    if (!tol.all_positive()) {
        throw std::invalid_argument("perov_iterate: tolerance must be positive componentwise");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("perov_iterate: max_iter must be >= 1");
    }
    const NonnegMatrix n_inv = neumann_inverse(cert.M);

    FixedPointResult res{x0};
    for (int k = 1; k <= max_iter; ++k) {
        PairFunction next = op(res.point);
        const OrderedVector step = pair_norm(next - res.point);
        res.step_norms.push_back(step);
        res.point = std::move(next);
        res.iterations = k;
        if (vec_leq(step, tol)) {
            res.error_bound = n_inv.apply(step);
            res.converged = true;
            return res;
        }
        if (k > 5) {
            const OrderedVector& old = res.step_norms[static_cast<std::size_t>(k) - 6];
            for (std::size_t i = 0; i < step.size(); ++i) {
                if (step[i] > 10.0 * old[i] && step[i] > tol[i]) {
                    res.error_bound = n_inv.apply(step);
                    res.message = "diverging: step norm grew by more than 10x over 5 iterations";
                    return res;
                }
            }
        }
    }
    res.error_bound = n_inv.apply(res.step_norms.back());
    res.message = "max iterations exceeded";
    return res;
}

NonnegMatrix estimate_lipschitz(
    const PairOperator& op,
    const std::vector<std::pair<PairFunction, PairFunction>>& samples) {
    if (samples.size() < 2) {
        throw DegenerateSamples("estimate_lipschitz: need at least 2 sample pairs");
    }
    NonnegMatrix zero(2);
    std::vector<double> est(4, 0.0);
    for (const auto& [u, v] : samples) {
        const OrderedVector d = pair_norm(u - v);
        if (d[0] == 0.0 && d[1] == 0.0) {
            throw DegenerateSamples("estimate_lipschitz: coincident sample pair");
        }
        // Column information only comes from pairs varying one component.
        std::size_t varying = 2;
        if (d[0] > 0.0 && d[1] == 0.0) varying = 0;
        if (d[1] > 0.0 && d[0] == 0.0) varying = 1;
        if (varying == 2) continue;
        const OrderedVector e = pair_norm(op(u) - op(v));
        for (std::size_t i = 0; i < 2; ++i) {
            est[i * 2 + varying] = std::max(est[i * 2 + varying], e[i] / d[varying]);
        }
    }
    return NonnegMatrix(2, std::move(est));
}

} // namespace perov
