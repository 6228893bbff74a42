#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perov/matrix.hpp"

namespace perov {

/// Constant data of a two-equation fractional hybrid system: integration
/// orders, claimed Lipschitz constants, the product-term bound P and the ball
/// radius r0. The claimed constants are treated as claims to be audited, not
/// as facts.
struct ProblemSpec {
    double T = 1.0;
    std::array<double, 2> alpha{};                       // orders of the product-term integrals
    std::vector<std::array<double, 2>> beta;             // beta[k][i]: k-th perturbation order, equation i
    std::array<std::array<double, 2>, 2> a{};            // f-Lipschitz constants a[i][j]
    std::vector<std::array<std::array<double, 2>, 2>> b; // b[k][i][j]: h-Lipschitz constants
    double P = 0.0;                                      // bound on |g_i| over the ball
    double F0 = 0.0;                                     // claimed sup of |f_i(.,0,0)|
    double H0 = 0.0;                                     // claimed sup of |h_i^k(.,0,0)|
    double rho = 0.0;                                    // claimed max of the a/b families
    double r0 = 0.0;                                     // working ball radius
    std::optional<std::array<double, 2>> claimed_combined_diagonal;

    std::size_t m() const { return beta.size(); }
    void validate() const; // throws std::invalid_argument on violated invariants
};

/// Everything the admissibility check computes, with pass/fail per condition.
struct TheoremReport {
    NonnegMatrix M_A{2};
    NonnegMatrix M_C{2};
    NonnegMatrix combined{2};
    OrderedVector B_norm_bound{0.0, 0.0};
    double rho_claimed = 0.0;
    double rho_computed = 0.0;
    double rho_condition_value = 0.0;
    bool rho_condition_pass = false;
    std::array<double, 3> spectral_radii{}; // M_A, M_C, combined
    std::array<bool, 3> matrices_converge{};
    double r0_min_value = 0.0; // NaN when the rho condition fails
    double r0 = 0.0;
    bool r0_pass = false;
    double F0 = 0.0;
    double H0 = 0.0;
    std::vector<std::string> flags; // informational discrepancies, never failures
    bool overall_pass = false;
};

/// The 2x2 matrix of f-Lipschitz constants, verbatim from the spec.
NonnegMatrix build_MA(const ProblemSpec& spec);

/// Entry (i,j) = sum_k T^beta_i^k / Gamma(beta_i^k + 1) * b^k_ij.
NonnegMatrix build_MC(const ProblemSpec& spec);

/// Component i = P * T^alpha_i / Gamma(alpha_i + 1).
OrderedVector build_B_bound(const ProblemSpec& spec);

/// max over the a and b constant families (the rho of the admissibility
/// condition, recomputed from the constants rather than trusted).
double rho_from_constants(const ProblemSpec& spec);

/// rho * [ P*(sum of T^alpha_i/Gamma(alpha_i+1)) +
///         sum_k (sum of T^beta_i^k/Gamma(beta_i^k+1)) ]; passes when < 1.
double rho_condition(const ProblemSpec& spec);

/// Smallest admissible ball radius. Throws ConditionViolated when the
/// rho-condition denominator is <= 0.
double r0_min(const ProblemSpec& spec);

/// Runs every check and assembles the report. overall_pass is the conjunction
/// of the rho condition, the three convergent-to-zero checks and r0_min <= r0.
TheoremReport full_report(const ProblemSpec& spec);

// --- serialization -------------------------------------------------------

/// Spec file format (JSON). Keys: T, alpha, beta, a, b, P, F0, H0, rho, r0,
/// and optional claimed.combined_diagonal. Doubles round-trip losslessly.
ProblemSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ProblemSpec& spec);

/// Report as JSON with stable key names; reals carry full precision. NaN
/// (r0_min when the rho condition fails) serializes as null.
std::string report_to_json(const TheoremReport& report);

void print_report_summary(std::ostream& os, const TheoremReport& report);

} // namespace perov
