#include "perov/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "perov/fixed_point.hpp"

namespace perov {

namespace {

using json = nlohmann::ordered_json;

// Uniform double in [0, 1) from the top 53 bits; keeps the stream identical
// across standard libraries, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GridFunction random_in_ball(std::mt19937_64& rng, const Grid& g, double r) {
    std::vector<double> v(g.points());
    for (double& x : v) x = (2.0 * uniform01(rng) - 1.0) * r;
    return GridFunction(g, std::move(v));
}

std::vector<std::pair<PairFunction, PairFunction>> sample_pairs(std::mt19937_64& rng,
                                                                const Grid& g, double r0,
                                                                int count) {
    std::vector<std::pair<PairFunction, PairFunction>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        GridFunction x = random_in_ball(rng, g, r0);
        GridFunction y = random_in_ball(rng, g, r0);
        if (i % 2 == 0) {
            GridFunction x2 = random_in_ball(rng, g, r0);
            out.emplace_back(PairFunction(x, y), PairFunction(std::move(x2), y));
        } else {
            GridFunction y2 = random_in_ball(rng, g, r0);
            out.emplace_back(PairFunction(x, y), PairFunction(x, std::move(y2)));
        }
    }
    return out;
}

bool entrywise_leq(const NonnegMatrix& a, const NonnegMatrix& b, double slack = 1e-12) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a(i, j) > b(i, j) + slack) return false;
        }
    }
    return true;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

json matrix_to_json(const NonnegMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.rows()) rows.push_back(row);
    return rows;
}

} // namespace

AuditReport run_audit(const ExampleProblem& ex, const AuditOptions& opts) {
    if (opts.pairs < 2) throw std::invalid_argument("run_audit: need at least 2 sample pairs");
    AuditReport rep;
    std::mt19937_64 rng(opts.seed);
    const auto pairs = sample_pairs(rng, ex.grid, ex.spec.r0, opts.pairs);

    rep.MA_sampled = estimate_lipschitz(ex.problem.A, pairs);
    rep.MC_sampled = estimate_lipschitz(ex.problem.C, pairs);
    rep.MA_within_claim = entrywise_leq(rep.MA_sampled, ex.problem.M_A);
    rep.MC_within_claim = entrywise_leq(rep.MC_sampled, ex.problem.M_C);
    if (!rep.MA_within_claim) {
        rep.discrepancies.push_back("sampled A-operator quotients exceed the claimed M_A");
    }
    if (!rep.MC_within_claim) {
        rep.discrepancies.push_back("sampled C-operator quotients exceed the claimed M_C");
    }
    const double rho_max = rho_from_constants(ex.spec);
    if (rep.MA_sampled.max_entry() > rho_max + 1e-12) {
        rep.discrepancies.push_back("sampled A quotient " + fmt(rep.MA_sampled.max_entry()) +
                                    " exceeds rho = " + fmt(rho_max));
    }

    // F0/H0 recomputed as grid maxima of the zero-argument kernels.
    for (std::size_t j = 0; j < ex.grid.points(); ++j) {
        const double t = ex.grid.node(j);
        rep.F0_grid = std::max({rep.F0_grid, std::abs(ex.fns.f1(t, 0.0, 0.0)),
                                std::abs(ex.fns.f2(t, 0.0, 0.0))});
        for (std::size_t k = 0; k < 2; ++k) {
            rep.H0_grid = std::max({rep.H0_grid, std::abs(ex.fns.h1[k](t, 0.0, 0.0)),
                                    std::abs(ex.fns.h2[k](t, 0.0, 0.0))});
        }
    }
    if (rep.F0_grid > ex.spec.F0 + 1e-9) {
        rep.discrepancies.push_back("F0 declared " + fmt(ex.spec.F0) +
                                    " but the grid maximum of |f_i(.,0,0)| is " +
                                    fmt(rep.F0_grid));
    }
    if (rep.H0_grid > ex.spec.H0 + 1e-9) {
        rep.discrepancies.push_back("H0 declared " + fmt(ex.spec.H0) +
                                    " but the grid maximum of |h_i^k(.,0,0)| is " +
                                    fmt(rep.H0_grid));
    }

    // Regularity floor of A over every sampled point (both pair members).
    rep.min_abs_A = {std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
    auto scan = [&rep, &ex](const PairFunction& u) {
        const PairFunction au = ex.problem.A(u);
        for (std::size_t j = 0; j < au.first.size(); ++j) {
            rep.min_abs_A[0] = std::min(rep.min_abs_A[0], std::abs(au.first[j]));
            rep.min_abs_A[1] = std::min(rep.min_abs_A[1], std::abs(au.second[j]));
        }
    };
    scan(PairFunction::zero(ex.grid));
    for (const auto& [u, v] : pairs) {
        scan(u);
        scan(v);
    }
    rep.regular = rep.min_abs_A[0] >= ex.problem.a_min && rep.min_abs_A[1] >= ex.problem.a_min;
    if (!rep.regular) {
        rep.discrepancies.push_back("A is not regular at the floor a_min = " +
                                    fmt(ex.problem.a_min));
    }

    rep.pass = rep.MA_within_claim && rep.MC_within_claim && rep.regular;
    return rep;
}

std::string audit_to_json(const AuditReport& rep) {
    json j;
    j["MA_sampled"] = matrix_to_json(rep.MA_sampled);
    j["MC_sampled"] = matrix_to_json(rep.MC_sampled);
    j["MA_within_claim"] = rep.MA_within_claim;
    j["MC_within_claim"] = rep.MC_within_claim;
    j["F0_grid"] = rep.F0_grid;
    j["H0_grid"] = rep.H0_grid;
    j["min_abs_A"] = {rep.min_abs_A[0], rep.min_abs_A[1]};
    j["regular"] = rep.regular;
    j["discrepancies"] = rep.discrepancies;
    j["pass"] = rep.pass;
    return j.dump(2);
}

void print_audit_summary(std::ostream& os, const AuditReport& rep) {
    os.precision(6);
    os << "[audit] sampled A quotients = [[" << rep.MA_sampled(0, 0) << ", "
       << rep.MA_sampled(0, 1) << "], [" << rep.MA_sampled(1, 0) << ", "
       << rep.MA_sampled(1, 1) << "]]"
       << (rep.MA_within_claim ? " <= claimed M_A" : " EXCEED claimed M_A") << "\n";
    os << "[audit] sampled C quotients = [[" << rep.MC_sampled(0, 0) << ", "
       << rep.MC_sampled(0, 1) << "], [" << rep.MC_sampled(1, 0) << ", "
       << rep.MC_sampled(1, 1) << "]]"
       << (rep.MC_within_claim ? " <= claimed M_C" : " EXCEED claimed M_C") << "\n";
    os << "[audit] grid F0 = " << rep.F0_grid << ", grid H0 = " << rep.H0_grid << "\n";
    os << "[audit] min |A_i| over samples = (" << rep.min_abs_A[0] << ", " << rep.min_abs_A[1]
       << ")" << (rep.regular ? " (regular)" : " (BELOW floor)") << "\n";
    for (const auto& d : rep.discrepancies) os << "[audit] discrepancy: " << d << "\n";
    os << "[audit] overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

} // namespace perov
