// Command-line front end: certifies the admissibility conditions of the
// built-in coupled fractional system (or a spec file overriding its
// constants), solves the hybrid equation and audits the claimed Lipschitz
// constants by sampling. Exit code 0 iff every requested certification
// passes, 1 on a failed certification, 2 on config/parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "perov/audit.hpp"
#include "perov/certify.hpp"
#include "perov/example_problem.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string mode = "check";
    std::size_t grid_N = 1024;
    double tol = 1e-8;       // inner (contraction) tolerance
    double outer_tol = 1e-6; // outer residual tolerance
    int max_outer = 200;
    std::uint64_t seed = 1;
    std::string spec_path;
    std::string report_path;
};

ordered_json solve_to_json(const perov::FixedPointResult& res, std::size_t grid_N) {
    ordered_json j;
    j["grid_N"] = grid_N;
    j["converged"] = res.converged;
    j["outer_iterations"] = res.iterations;
    j["residual"] = {res.error_bound[0], res.error_bound[1]};
    j["in_ball"] = !res.radius_exceeded;
    ordered_json hist = ordered_json::array();
    for (const auto& r : res.step_norms) hist.push_back({r[0], r[1]});
    j["residual_history"] = hist;
    if (!res.message.empty()) j["message"] = res.message;
    return j;
}

int run(const RunConfig& cfg) {
    const bool do_check = cfg.mode == "check" || cfg.mode == "all";
    const bool do_solve = cfg.mode == "solve" || cfg.mode == "all";
    const bool do_audit = cfg.mode == "audit" || cfg.mode == "all";

    perov::ProblemSpec spec;
    if (!cfg.spec_path.empty()) {
        std::ifstream in(cfg.spec_path);
        if (!in) {
            std::cerr << "error: cannot open spec file " << cfg.spec_path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        spec = perov::spec_from_json(buf.str());
    } else {
        spec = perov::builtin_spec();
    }

    ordered_json out;
    out["config"] = {{"mode", cfg.mode},      {"grid_N", cfg.grid_N},
                     {"tol", cfg.tol},        {"outer_tol", cfg.outer_tol},
                     {"max_outer", cfg.max_outer}, {"seed", cfg.seed}};

    bool all_pass = true;
    std::string first_failure;
    auto fail = [&](const std::string& name) {
        all_pass = false;
        if (first_failure.empty()) first_failure = name;
    };

    if (do_check) {
        const perov::TheoremReport rep = perov::full_report(spec);
        perov::print_report_summary(std::cout, rep);
        out["check"] = ordered_json::parse(perov::report_to_json(rep));
        if (!rep.rho_condition_pass) fail("rho_condition");
        if (!(rep.matrices_converge[0] && rep.matrices_converge[1] && rep.matrices_converge[2]))
            fail("matrices_converge");
        if (!rep.r0_pass) fail("r0_admissible");
    }

    if (do_solve) {
        const perov::ExampleProblem ex = perov::builtin_example_with_spec(spec, cfg.grid_N);
        const perov::OrderedVector outer_tol{cfg.outer_tol, cfg.outer_tol};
        const perov::OrderedVector inner_tol{cfg.tol, cfg.tol};
        const perov::FixedPointResult res =
            perov::outer_solve(ex.problem, perov::PairFunction::zero(ex.grid), outer_tol,
                               cfg.max_outer, inner_tol);
        std::cout.precision(6);
        std::cout << "[solve] grid N = " << cfg.grid_N << ", outer tol = " << cfg.outer_tol
                  << "\n[solve] " << (res.converged ? "converged" : "did not converge")
                  << " after " << res.iterations << " outer iterations; residual = ("
                  << res.error_bound[0] << ", " << res.error_bound[1] << "); in r0 ball: "
                  << (res.radius_exceeded ? "no" : "yes") << "\n";
        if (!res.message.empty()) std::cout << "[solve] note: " << res.message << "\n";
        out["solve"] = solve_to_json(res, cfg.grid_N);
        if (!res.converged) fail("solve_residual");
        if (res.radius_exceeded) fail("solve_radius");
    }

    if (do_audit) {
        const perov::ExampleProblem ex = perov::builtin_example_with_spec(spec, cfg.grid_N);
        perov::AuditOptions opts;
        opts.seed = cfg.seed;
        const perov::AuditReport rep = perov::run_audit(ex, opts);
        perov::print_audit_summary(std::cout, rep);
        out["audit"] = ordered_json::parse(perov::audit_to_json(rep));
        if (!rep.MA_within_claim) fail("audit_M_A");
        if (!rep.MC_within_claim) fail("audit_M_C");
        if (!rep.regular) fail("audit_regularity");
    }

    if (!cfg.report_path.empty()) {
        std::ofstream rep_out(cfg.report_path);
        if (!rep_out) {
            std::cerr << "error: cannot write report to " << cfg.report_path << "\n";
            return 2;
        }
        rep_out << out.dump(2) << "\n";
    }

    if (!all_pass) {
        std::cout << "FAILED: " << first_failure << "\n";
        return 1;
    }
    std::cout << "all requested certifications passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Certify and solve the built-in coupled fractional hybrid system"};
    app.add_option("--mode", cfg.mode, "check | solve | audit | all")
        ->check(CLI::IsMember({"check", "solve", "audit", "all"}))
        ->capture_default_str();
    app.add_option("--grid", cfg.grid_N, "number of grid subintervals")
        ->check(CLI::Range(static_cast<std::size_t>(16), static_cast<std::size_t>(1 << 20)))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "inner contraction tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--outer-tol", cfg.outer_tol, "outer residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-outer", cfg.max_outer, "outer iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for audit sampling")->capture_default_str();
    app.add_option("--spec", cfg.spec_path, "JSON spec file overriding the builtin constants");
    app.add_option("--report", cfg.report_path, "write the machine-readable JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(cfg);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid spec file: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
