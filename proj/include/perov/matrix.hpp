#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "perov/errors.hpp"

namespace perov {

/// Vector in R^n under the componentwise order. Values may be negative in
/// general; instances representing norms or radii are nonnegative.
class OrderedVector {
  public:
    OrderedVector() = default;
    explicit OrderedVector(std::size_t n, double fill = 0.0);
    OrderedVector(std::initializer_list<double> values);
    explicit OrderedVector(std::vector<double> values);

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }
    const std::vector<double>& values() const { return v_; }

    double max() const;
    double max_abs() const;
    bool all_positive() const;
    bool all_nonnegative() const;

    friend OrderedVector operator+(const OrderedVector& a, const OrderedVector& b);
    friend OrderedVector operator-(const OrderedVector& a, const OrderedVector& b);
    friend OrderedVector operator*(double c, const OrderedVector& a);

  private:
    std::vector<double> v_;
};

/// Componentwise comparison a_i <= b_i for all i.
bool vec_leq(const OrderedVector& a, const OrderedVector& b);

/// Square matrix with finite nonnegative entries, immutable once built.
/// Carries the Lipschitz/contraction data of the vector-valued metric setting.
class NonnegMatrix {
  public:
    explicit NonnegMatrix(std::size_t n); // zero matrix
    NonnegMatrix(std::size_t n, std::vector<double> row_major);
    NonnegMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static NonnegMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    double max_entry() const;
    double max_row_sum() const; // operator infinity-norm

    std::vector<std::vector<double>> rows() const;

    OrderedVector apply(const OrderedVector& v) const;

    friend NonnegMatrix operator+(const NonnegMatrix& a, const NonnegMatrix& b);
    friend NonnegMatrix operator*(const NonnegMatrix& a, const NonnegMatrix& b);
    NonnegMatrix scaled(double c) const; // c >= 0

  private:
    std::size_t n_ = 0;
    std::vector<double> e_;
    void validate() const;
};

/// Largest eigenvalue modulus. Closed form from the characteristic polynomial
/// for n <= 2; power iteration (all-ones start, relative tolerance 1e-12) for
/// larger n, with an eps-shift fallback for reducible matrices.
double spectral_radius(const NonnegMatrix& m);

/// True iff spectral_radius(m) < 1 (strict; the boundary case is rejected).
bool is_convergent_to_zero(const NonnegMatrix& m);

/// True iff the max entry of m^k is below tol. Cross-check of
/// is_convergent_to_zero, not the primary test.
bool power_vanishes(const NonnegMatrix& m, int k, double tol);

/// Attempts (I - M)^{-1} by direct linear solve, with no convergence
/// precondition. Returns nullopt when I - M is singular or the inverse has a
/// genuinely negative entry; tiny negative round-off is clamped to zero.
std::optional<NonnegMatrix> try_neumann_inverse(const NonnegMatrix& m);

/// (I - M)^{-1} for a convergent-to-zero M. All entries are nonnegative.
/// Throws NotConvergentError when the precondition fails.
NonnegMatrix neumann_inverse(const NonnegMatrix& m);

} // namespace perov
