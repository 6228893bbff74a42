#include "perov/example_problem.hpp"

#include <cmath>
#include <memory>

#include "perov/fractional.hpp"

namespace perov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ExampleFunctions builtin_functions() {
    ExampleFunctions f;
    f.f1 = [](double t, double x, double /*y*/) {
        return (3.0 * std::cos(kPi * t) + 2.0 * t) /
               (5.0 * (2.0 + 10.0 * t * t) * (std::abs(x) + 3.0));
    };
    f.f2 = [](double t, double /*x*/, double y) {
        return (4.0 * std::cos(kPi * t) + 3.0 * t) /
               (7.0 * (3.0 + 8.0 * t * t) * (std::abs(y) + 6.0));
    };
    f.g1 = [](double t, double x, double y) {
        return 3.0 / (35.0 * (13.0 - t * t)) * (7.0 * std::abs(x) + 15.0 * std::abs(y));
    };
    f.g2 = f.g1;
    f.h1[0] = [](double t, double x, double /*y*/) {
        const double ax = std::abs(x);
        return 2.0 * t * std::exp(-3.0 * t) / (15.0 * (3.0 + t)) *
               ((x * x + 9.0 * ax) / (ax + 5.0) + 12.0 * std::exp(3.0 * t) / 5.0);
    };
    f.h1[1] = [](double t, double x, double /*y*/) {
        const double ax = std::abs(x);
        return 2.0 * t * std::sin(kPi * t) / (14.0 + t * t) *
               ((x * x + 5.0 * ax) / (ax + 8.0) + 1.0 / 3.0);
    };
    f.h2[0] = [](double t, double /*x*/, double y) {
        const double ay = std::abs(y);
        return t * std::sin(t) / (7.0 * (4.0 + std::exp(t))) *
               ((y * y + 4.0 * ay) / (ay + 3.0) + std::cos(t));
    };
    f.h2[1] = [](double t, double /*x*/, double y) {
        const double ay = std::abs(y);
        return 3.0 * t * std::cos(t) / (10.0 * (4.0 - t * t)) *
               ((y * y + 5.0 * ay) / (ay + 4.0) + t / (t + 2.0));
    };
    return f;
}

// Samples (t, x(t), y(t)) -> fn over the grid of u.
GridFunction compose(const ExampleFunctions::Fn& fn, const PairFunction& u) {
    const Grid& g = u.grid();
    std::vector<double> v(g.points());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = fn(g.node(j), u.first[j], u.second[j]);
    }
    return GridFunction(g, std::move(v));
}

} // namespace

ProblemSpec builtin_spec() {
    ProblemSpec spec;
    spec.T = 1.0;
    spec.alpha = {0.5, 0.5};
    spec.beta = {{1.0 / 3.0, 7.0 / 4.0}, {10.0 / 3.0, 29.0 / 6.0}};
    spec.a = {{{1.0 / 12.0, 0.0}, {0.0, 1.0 / 6.0}}};
    spec.b = {
        {{{3.0 / 50.0, 0.0}, {0.0, 4.0 / (21.0 * (4.0 + std::exp(1.0)))}}},
        {{{1.0 / 12.0, 0.0}, {0.0, 1.0 / 8.0}}},
    };
    spec.P = 0.25;
    spec.F0 = 1.0 / 36.0;
    spec.H0 = 2.0 / 25.0;
    spec.rho = 1.0 / 6.0;
    spec.r0 = 2.0;
    spec.claimed_combined_diagonal = {{0.0990, 0.0653}};
    return spec;
}

ExampleProblem builtin_example_with_spec(const ProblemSpec& spec, std::size_t grid_N) {
    spec.validate();
    if (spec.m() != 2) {
        throw std::invalid_argument("builtin kernels require exactly two perturbation orders");
    }
    ExampleProblem ex{spec, HybridProblem{}, Grid(spec.T, grid_N), builtin_functions()};
    const Grid grid = ex.grid;
    const ExampleFunctions fns = ex.fns;

    // One weight table per distinct order, shared by every application.
    auto wB1 = std::make_shared<const RLWeights>(grid, FracOrder(spec.alpha[0]));
    auto wB2 = spec.alpha[1] == spec.alpha[0]
                   ? wB1
                   : std::make_shared<const RLWeights>(grid, FracOrder(spec.alpha[1]));
    std::array<std::shared_ptr<const RLWeights>, 2> wC1, wC2;
    for (std::size_t k = 0; k < 2; ++k) {
        wC1[k] = std::make_shared<const RLWeights>(grid, FracOrder(spec.beta[k][0]));
        wC2[k] = std::make_shared<const RLWeights>(grid, FracOrder(spec.beta[k][1]));
    }

    ex.problem.A = [fns](const PairFunction& u) {
        return PairFunction(compose(fns.f1, u), compose(fns.f2, u));
    };
    ex.problem.B = [fns, wB1, wB2](const PairFunction& u) {
        return PairFunction(wB1->apply(compose(fns.g1, u)), wB2->apply(compose(fns.g2, u)));
    };
    ex.problem.C = [fns, wC1, wC2](const PairFunction& u) {
        GridFunction c1 = wC1[0]->apply(compose(fns.h1[0], u)) +
                          wC1[1]->apply(compose(fns.h1[1], u));
        GridFunction c2 = wC2[0]->apply(compose(fns.h2[0], u)) +
                          wC2[1]->apply(compose(fns.h2[1], u));
        return PairFunction(std::move(c1), std::move(c2));
    };
    ex.problem.M_A = build_MA(spec);
    ex.problem.M_C = build_MC(spec);
    ex.problem.B_norm_bound = build_B_bound(spec);
    ex.problem.r0 = spec.r0;
    return ex;
}

ExampleProblem builtin_example(std::size_t grid_N) {
    return builtin_example_with_spec(builtin_spec(), grid_N);
}

} // namespace perov
