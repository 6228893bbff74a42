#pragma once

#include <array>
#include <functional>

#include "perov/certify.hpp"
#include "perov/hybrid.hpp"

namespace perov {

/// Scalar kernels of the built-in coupled system: f_i multiplies the
/// product-term integral of g_i, and the h_i^k feed the perturbation
/// integrals. All take (t, x, y).
struct ExampleFunctions {
    using Fn = std::function<double(double, double, double)>;
    Fn f1, f2, g1, g2;
    std::array<Fn, 2> h1; // h1[k]
    std::array<Fn, 2> h2; // h2[k]
};

/// The built-in problem assembled on a grid: constant data (spec), the
/// operator triple acting on pair functions (problem) and the raw scalar
/// kernels for audits.
struct ExampleProblem {
    ProblemSpec spec;
    HybridProblem problem;
    Grid grid;
    ExampleFunctions fns;
};

/// Constant data of the built-in example (orders, Lipschitz claims, P, F0,
/// H0, rho, r0 and the declared combined-diagonal values).
ProblemSpec builtin_spec();

/// Builds the built-in coupled system on a uniform grid with N subintervals.
/// The perturbation operators carry precomputed fractional-integral weight
/// tables for each order, shared by all applications on this grid.
ExampleProblem builtin_example(std::size_t grid_N);

/// Assembles a HybridProblem with the builtin kernels but certificates taken
/// from `spec` (used when a spec file overrides the constant data).
ExampleProblem builtin_example_with_spec(const ProblemSpec& spec, std::size_t grid_N);

} // namespace perov
