#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "perov/example_problem.hpp"

namespace perov {

struct AuditOptions {
    std::uint64_t seed = 1;
    int pairs = 500; // sample pairs per operator, alternating the varied component
};

/// Result of the sampling audit of the claimed constants. The sampled
/// matrices are lower bounds on the true Lipschitz matrices; exceeding a
/// claimed constant disproves the claim and is recorded as a discrepancy.
struct AuditReport {
    NonnegMatrix MA_sampled{2};
    NonnegMatrix MC_sampled{2};
    bool MA_within_claim = false;
    bool MC_within_claim = false;
    double F0_grid = 0.0; // grid max of |f_i(.,0,0)|
    double H0_grid = 0.0; // grid max of |h_i^k(.,0,0)|
    std::array<double, 2> min_abs_A{}; // min |A_i| over nodes of all sampled points
    bool regular = false;              // min_abs_A >= a_min
    std::vector<std::string> discrepancies;
    bool pass = false; // MA_within_claim && MC_within_claim && regular
};

/// Samples random pairs in the r0 ball (one component perturbed at a time),
/// estimates the Lipschitz matrices of A and C, audits them against the
/// claimed M_A / M_C, recomputes F0/H0 from grid maxima and checks the
/// regularity floor of A. Deterministic for a fixed seed.
AuditReport run_audit(const ExampleProblem& ex, const AuditOptions& opts = {});

std::string audit_to_json(const AuditReport& report);

void print_audit_summary(std::ostream& os, const AuditReport& report);

} // namespace perov
