#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "perov/audit.hpp"
#include "perov/certify.hpp"
#include "perov/example_problem.hpp"
#include "perov/fractional.hpp"
#include "perov/gamma.hpp"
#include "perov/matrix.hpp"

namespace py = pybind11;

namespace {

perov::NonnegMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return perov::NonnegMatrix(n, std::move(flat));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vector-normed fixed-point machinery for hybrid operator equations "
              "x = Ax*Bx + Cx, with fractional-integral applications";

    m.def("gamma", &perov::gamma_fn, py::arg("z"),
          "Gamma function for z > 0 (Lanczos approximation).");

    m.def(
        "spectral_radius",
        [](const std::vector<std::vector<double>>& rows) {
            return perov::spectral_radius(from_rows(rows));
        },
        py::arg("matrix"), "Largest eigenvalue modulus of a nonnegative square matrix.");

    m.def(
        "is_convergent_to_zero",
        [](const std::vector<std::vector<double>>& rows) {
            return perov::is_convergent_to_zero(from_rows(rows));
        },
        py::arg("matrix"), "True iff the spectral radius is strictly below 1.");

    m.def(
        "neumann_inverse",
        [](const std::vector<std::vector<double>>& rows) {
            return perov::neumann_inverse(from_rows(rows)).rows();
        },
        py::arg("matrix"), "(I - M)^{-1} for a convergent-to-zero M; entries are nonnegative.");

    m.def(
        "power_vanishes",
        [](const std::vector<std::vector<double>>& rows, int k, double tol) {
            return perov::power_vanishes(from_rows(rows), k, tol);
        },
        py::arg("matrix"), py::arg("k"), py::arg("tol"),
        "True iff the max entry of M^k is below tol.");

    m.def(
        "rl_integral",
        [](const std::vector<double>& samples, double alpha, double T) {
            if (samples.size() < 2) {
                throw std::invalid_argument("need at least 2 samples");
            }
            perov::Grid g(T, samples.size() - 1);
            perov::GridFunction f(g, samples);
            return perov::rl_integral(f, perov::FracOrder(alpha)).values();
        },
        py::arg("samples"), py::arg("alpha"), py::arg("T") = 1.0,
        "Order-alpha integral of uniformly sampled data on [0, T], at every node.");

    m.def("builtin_spec_json", [] { return perov::spec_to_json(perov::builtin_spec()); },
          "Constant data of the built-in coupled system, as spec-file JSON.");

    m.def(
        "check_report_json",
        [](const std::string& spec_json) {
            return perov::report_to_json(perov::full_report(perov::spec_from_json(spec_json)));
        },
        py::arg("spec_json"), "Run the admissibility checks on spec-file JSON.");

    m.def(
        "solve_builtin_json",
        [](std::size_t grid_N, double outer_tol, double inner_tol, int max_outer) {
            const perov::ExampleProblem ex = perov::builtin_example(grid_N);
            const perov::FixedPointResult res = perov::outer_solve(
                ex.problem, perov::PairFunction::zero(ex.grid),
                perov::OrderedVector{outer_tol, outer_tol}, max_outer,
                perov::OrderedVector{inner_tol, inner_tol});
            nlohmann::ordered_json j;
            j["converged"] = res.converged;
            j["outer_iterations"] = res.iterations;
            j["residual"] = {res.error_bound[0], res.error_bound[1]};
            j["in_ball"] = !res.radius_exceeded;
            if (!res.message.empty()) j["message"] = res.message;
            return j.dump();
        },
        py::arg("grid_n") = 256, py::arg("outer_tol") = 1e-6, py::arg("inner_tol") = 1e-8,
        py::arg("max_outer") = 200, "Solve the built-in system; returns a JSON summary.");

    m.def(
        "audit_builtin_json",
        [](std::size_t grid_N, std::uint64_t seed, int pairs) {
            perov::AuditOptions opts;
            opts.seed = seed;
            opts.pairs = pairs;
            return perov::audit_to_json(perov::run_audit(perov::builtin_example(grid_N), opts));
        },
        py::arg("grid_n") = 256, py::arg("seed") = 1, py::arg("pairs") = 500,
        "Sampled Lipschitz audit of the built-in system; returns JSON.");
}
