#include "perov/certify.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "perov/gamma.hpp"
#include "perov/hybrid.hpp"

namespace perov {

namespace {

using json = nlohmann::ordered_json;

double kernel_factor(double order, double T) {
    // T^order / Gamma(order + 1), the sup of I^order applied to 1.
    return std::pow(T, order) / gamma_fn(order + 1.0);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace

void ProblemSpec::validate() const {
    if (!(T > 0.0)) throw std::invalid_argument("ProblemSpec: T must be > 0");
    for (double al : alpha) {
        if (!(al > 0.0)) throw std::invalid_argument("ProblemSpec: alpha orders must be > 0");
    }
    if (beta.size() != b.size()) {
        throw std::invalid_argument("ProblemSpec: beta and b must have one entry per k");
    }
    for (const auto& bk : beta) {
        for (double be : bk) {
            if (!(be > 0.0)) throw std::invalid_argument("ProblemSpec: beta orders must be > 0");
        }
    }
    for (const auto& row : a) {
        for (double x : row) {
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw std::invalid_argument("ProblemSpec: a constants must be finite and >= 0");
            }
        }
    }
    for (const auto& bk : b) {
        for (const auto& row : bk) {
            for (double x : row) {
                if (!(x >= 0.0) || !std::isfinite(x)) {
                    throw std::invalid_argument("ProblemSpec: b constants must be finite and >= 0");
                }
            }
        }
    }
    if (!(P > 0.0)) throw std::invalid_argument("ProblemSpec: P must be > 0");
    if (!(F0 >= 0.0) || !(H0 >= 0.0) || !(rho >= 0.0) || !(r0 >= 0.0)) {
        throw std::invalid_argument("ProblemSpec: F0, H0, rho, r0 must be >= 0");
    }
}

NonnegMatrix build_MA(const ProblemSpec& spec) {
    return NonnegMatrix(2, {spec.a[0][0], spec.a[0][1], spec.a[1][0], spec.a[1][1]});
}

NonnegMatrix build_MC(const ProblemSpec& spec) {
    std::vector<double> e(4, 0.0);
    for (std::size_t k = 0; k < spec.m(); ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            const double factor = kernel_factor(spec.beta[k][i], spec.T);
            for (std::size_t j = 0; j < 2; ++j) {
                e[i * 2 + j] += factor * spec.b[k][i][j];
            }
        }
    }
    return NonnegMatrix(2, std::move(e));
}

OrderedVector build_B_bound(const ProblemSpec& spec) {
    return OrderedVector{spec.P * kernel_factor(spec.alpha[0], spec.T),
                         spec.P * kernel_factor(spec.alpha[1], spec.T)};
}

double rho_from_constants(const ProblemSpec& spec) {
    double m = 0.0;
    for (const auto& row : spec.a) {
        for (double x : row) m = std::max(m, x);
    }
    for (const auto& bk : spec.b) {
        for (const auto& row : bk) {
            for (double x : row) m = std::max(m, x);
        }
    }
    return m;
}

namespace {

double rho_bracket(const ProblemSpec& spec) {
    double s = spec.P * (kernel_factor(spec.alpha[0], spec.T) +
                         kernel_factor(spec.alpha[1], spec.T));
    for (std::size_t k = 0; k < spec.m(); ++k) {
        s += kernel_factor(spec.beta[k][0], spec.T) + kernel_factor(spec.beta[k][1], spec.T);
    }
    return s;
}

} // namespace

double rho_condition(const ProblemSpec& spec) {
    return rho_from_constants(spec) * rho_bracket(spec);
}

double r0_min(const ProblemSpec& spec) {
    const double cond = rho_condition(spec);
    if (!(cond < 1.0)) {
        throw ConditionViolated("r0_min: rho condition fails, denominator <= 0");
    }
    const double alpha_sum = kernel_factor(spec.alpha[0], spec.T) +
                             kernel_factor(spec.alpha[1], spec.T);
    double beta_sum = 0.0;
    for (std::size_t k = 0; k < spec.m(); ++k) {
        beta_sum += kernel_factor(spec.beta[k][0], spec.T) +
                    kernel_factor(spec.beta[k][1], spec.T);
    }
    return (spec.F0 * spec.P * alpha_sum + spec.H0 * beta_sum) / (1.0 - cond);
}

TheoremReport full_report(const ProblemSpec& spec) {
    spec.validate();
    TheoremReport rep;
    rep.M_A = build_MA(spec);
    rep.M_C = build_MC(spec);
    rep.B_norm_bound = build_B_bound(spec);
    rep.combined = combined_matrix(rep.M_A, rep.M_C, rep.B_norm_bound);
    rep.rho_claimed = spec.rho;
    rep.rho_computed = rho_from_constants(spec);
    rep.rho_condition_value = rho_condition(spec);
    rep.rho_condition_pass = rep.rho_condition_value < 1.0;

    const NonnegMatrix* mats[3] = {&rep.M_A, &rep.M_C, &rep.combined};
    for (int i = 0; i < 3; ++i) {
        rep.spectral_radii[static_cast<std::size_t>(i)] = spectral_radius(*mats[i]);
        rep.matrices_converge[static_cast<std::size_t>(i)] =
            rep.spectral_radii[static_cast<std::size_t>(i)] < 1.0;
    }

    rep.r0 = spec.r0;
    rep.F0 = spec.F0;
    rep.H0 = spec.H0;
    if (rep.rho_condition_pass) {
        rep.r0_min_value = r0_min(spec);
        rep.r0_pass = rep.r0_min_value <= spec.r0;
    } else {
        rep.r0_min_value = std::numeric_limits<double>::quiet_NaN();
        rep.r0_pass = false;
    }

    if (std::abs(rep.rho_claimed - rep.rho_computed) > 1e-12) {
        rep.flags.push_back("rho declared " + fmt(rep.rho_claimed) +
                            " differs from max of constants " + fmt(rep.rho_computed));
    }
    if (spec.claimed_combined_diagonal) {
        const auto& claimed = *spec.claimed_combined_diagonal;
        for (std::size_t i = 0; i < 2; ++i) {
            const double computed = rep.combined(i, i);
            const double diff = std::abs(computed - claimed[i]);
            if (diff > 1e-4) {
                rep.flags.push_back("combined[" + std::to_string(i) + "][" + std::to_string(i) +
                                    "] computed " + fmt(computed) + " differs from declared " +
                                    fmt(claimed[i]) + " by " + fmt(diff) +
                                    " (rounding in the declared value)");
            }
        }
    }

    rep.overall_pass = rep.rho_condition_pass && rep.matrices_converge[0] &&
                       rep.matrices_converge[1] && rep.matrices_converge[2] && rep.r0_pass;
    return rep;
}

namespace {

json matrix_to_json(const NonnegMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.rows()) rows.push_back(row);
    return rows;
}

} // namespace

ProblemSpec spec_from_json(const std::string& text) {
    const json j = json::parse(text);
    ProblemSpec spec;
    spec.T = j.at("T").get<double>();
    const auto alpha = j.at("alpha").get<std::vector<double>>();
    if (alpha.size() != 2) throw std::invalid_argument("spec: alpha must have 2 entries");
    spec.alpha = {alpha[0], alpha[1]};
    for (const auto& bk : j.at("beta")) {
        const auto v = bk.get<std::vector<double>>();
        if (v.size() != 2) throw std::invalid_argument("spec: each beta row must have 2 entries");
        spec.beta.push_back({v[0], v[1]});
    }
    const auto a = j.at("a").get<std::vector<std::vector<double>>>();
    if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2) {
        throw std::invalid_argument("spec: a must be 2x2");
    }
    spec.a = {{{a[0][0], a[0][1]}, {a[1][0], a[1][1]}}};
    for (const auto& bk : j.at("b")) {
        const auto v = bk.get<std::vector<std::vector<double>>>();
        if (v.size() != 2 || v[0].size() != 2 || v[1].size() != 2) {
            throw std::invalid_argument("spec: each b block must be 2x2");
        }
        spec.b.push_back({{{v[0][0], v[0][1]}, {v[1][0], v[1][1]}}});
    }
    spec.P = j.at("P").get<double>();
    spec.F0 = j.at("F0").get<double>();
    spec.H0 = j.at("H0").get<double>();
    spec.rho = j.at("rho").get<double>();
    spec.r0 = j.at("r0").get<double>();
    if (j.contains("claimed") && j["claimed"].contains("combined_diagonal")) {
        const auto v = j["claimed"]["combined_diagonal"].get<std::vector<double>>();
        if (v.size() != 2) {
            throw std::invalid_argument("spec: claimed.combined_diagonal must have 2 entries");
        }
        spec.claimed_combined_diagonal = {{v[0], v[1]}};
    }
    spec.validate();
    return spec;
}

std::string spec_to_json(const ProblemSpec& spec) {
    json j;
    j["T"] = spec.T;
    j["alpha"] = {spec.alpha[0], spec.alpha[1]};
    json beta = json::array();
    for (const auto& bk : spec.beta) beta.push_back({bk[0], bk[1]});
    j["beta"] = beta;
    j["a"] = {{spec.a[0][0], spec.a[0][1]}, {spec.a[1][0], spec.a[1][1]}};
    json b = json::array();
    for (const auto& bk : spec.b) {
        b.push_back({{bk[0][0], bk[0][1]}, {bk[1][0], bk[1][1]}});
    }
    j["b"] = b;
    j["P"] = spec.P;
    j["F0"] = spec.F0;
    j["H0"] = spec.H0;
    j["rho"] = spec.rho;
    j["r0"] = spec.r0;
    if (spec.claimed_combined_diagonal) {
        j["claimed"]["combined_diagonal"] = {(*spec.claimed_combined_diagonal)[0],
                                             (*spec.claimed_combined_diagonal)[1]};
    }
    return j.dump(2);
}

std::string report_to_json(const TheoremReport& rep) {
    json j;
    j["M_A"] = matrix_to_json(rep.M_A);
    j["M_C"] = matrix_to_json(rep.M_C);
    j["combined"] = matrix_to_json(rep.combined);
    j["B_norm_bound"] = {rep.B_norm_bound[0], rep.B_norm_bound[1]};
    j["rho"] = {{"claimed", rep.rho_claimed}, {"computed", rep.rho_computed}};
    j["rho_condition"] = {{"value", rep.rho_condition_value}, {"pass", rep.rho_condition_pass}};
    j["spectral_radii"] = {{"M_A", rep.spectral_radii[0]},
                           {"M_C", rep.spectral_radii[1]},
                           {"combined", rep.spectral_radii[2]}};
    j["matrices_converge"] = {{"M_A", rep.matrices_converge[0]},
                              {"M_C", rep.matrices_converge[1]},
                              {"combined", rep.matrices_converge[2]}};
    j["r0"] = {{"claimed", rep.r0}, {"min_required", rep.r0_min_value}, {"pass", rep.r0_pass}};
    j["F0"] = rep.F0;
    j["H0"] = rep.H0;
    j["flags"] = rep.flags;
    j["overall_pass"] = rep.overall_pass;
    return j.dump(2);
}

void print_report_summary(std::ostream& os, const TheoremReport& rep) {
    os.precision(6);
    os << "[check] combined matrix = [[" << rep.combined(0, 0) << ", " << rep.combined(0, 1)
       << "], [" << rep.combined(1, 0) << ", " << rep.combined(1, 1) << "]]\n";
    os << "[check] spectral radii: M_A " << rep.spectral_radii[0] << ", M_C "
       << rep.spectral_radii[1] << ", combined " << rep.spectral_radii[2]
       << (rep.matrices_converge[0] && rep.matrices_converge[1] && rep.matrices_converge[2]
               ? " (all < 1)"
               : " (NOT all < 1)")
       << "\n";
    os << "[check] rho = " << rep.rho_computed << ", rho condition value = "
       << rep.rho_condition_value << (rep.rho_condition_pass ? " < 1" : " >= 1 FAIL") << "\n";
    os << "[check] r0_min = " << rep.r0_min_value << " vs r0 = " << rep.r0
       << (rep.r0_pass ? " (admissible)" : " (NOT admissible)") << "\n";
    for (const auto& f : rep.flags) os << "[check] flag: " << f << "\n";
    os << "[check] overall: " << (rep.overall_pass ? "PASS" : "FAIL") << "\n";
}

} // namespace perov
