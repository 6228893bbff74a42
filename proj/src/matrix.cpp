#include "perov/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace perov {

namespace {

constexpr double kPowerTol = 1e-12;
constexpr double kShiftEps = 1e-9;
constexpr int kMaxPowerIters = 50000;
constexpr double kNegClamp = 1e-10; // round-off allowance on provably nonnegative entries

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": sizes " + std::to_string(a) +
                                " and " + std::to_string(b));
    }
}

} // namespace

OrderedVector::OrderedVector(std::size_t n, double fill) : v_(n, fill) {}

OrderedVector::OrderedVector(std::initializer_list<double> values) : v_(values) {}

OrderedVector::OrderedVector(std::vector<double> values) : v_(std::move(values)) {}

double OrderedVector::max() const {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v_) m = std::max(m, x);
    return m;
}

double OrderedVector::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

bool OrderedVector::all_positive() const {
    return std::all_of(v_.begin(), v_.end(), [](double x) { return x > 0.0; });
}

bool OrderedVector::all_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](double x) { return x >= 0.0; });
}

OrderedVector operator+(const OrderedVector& a, const OrderedVector& b) {
    require_same_size(a.size(), b.size(), "OrderedVector +");
    OrderedVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

OrderedVector operator-(const OrderedVector& a, const OrderedVector& b) {
    require_same_size(a.size(), b.size(), "OrderedVector -");
    OrderedVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

OrderedVector operator*(double c, const OrderedVector& a) {
    OrderedVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

bool vec_leq(const OrderedVector& a, const OrderedVector& b) {
    require_same_size(a.size(), b.size(), "vec_leq");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

NonnegMatrix::NonnegMatrix(std::size_t n) : n_(n), e_(n * n, 0.0) { validate(); }

NonnegMatrix::NonnegMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), e_(std::move(row_major)) {
    if (e_.size() != n_ * n_) {
        throw DimensionMismatch("NonnegMatrix: entry count does not match dimension");
    }
    validate();
}

NonnegMatrix::NonnegMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    n_ = rows.size();
    e_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw DimensionMismatch("NonnegMatrix: ragged initializer");
        }
        e_.insert(e_.end(), row.begin(), row.end());
    }
    validate();
}

void NonnegMatrix::validate() const {
    if (n_ == 0) throw DimensionMismatch("NonnegMatrix: dimension must be >= 1");
    for (double x : e_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw std::invalid_argument("NonnegMatrix: entries must be finite and >= 0");
        }
    }
}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
    NonnegMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1.0;
    return m;
}

double NonnegMatrix::max_entry() const {
    return *std::max_element(e_.begin(), e_.end());
}

double NonnegMatrix::max_row_sum() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += e_[i * n_ + j];
        m = std::max(m, s);
    }
    return m;
}

std::vector<std::vector<double>> NonnegMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(e_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

OrderedVector NonnegMatrix::apply(const OrderedVector& v) const {
    require_same_size(n_, v.size(), "NonnegMatrix::apply");
    OrderedVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += e_[i * n_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

NonnegMatrix operator+(const NonnegMatrix& a, const NonnegMatrix& b) {
    require_same_size(a.n_, b.n_, "NonnegMatrix +");
    std::vector<double> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
    return NonnegMatrix(a.n_, std::move(e));
}

NonnegMatrix operator*(const NonnegMatrix& a, const NonnegMatrix& b) {
    require_same_size(a.n_, b.n_, "NonnegMatrix *");
    const std::size_t n = a.n_;
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a.e_[i * n + k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += aik * b.e_[k * n + j];
            }
        }
    }
    return NonnegMatrix(n, std::move(e));
}

NonnegMatrix NonnegMatrix::scaled(double c) const {
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("NonnegMatrix::scaled: factor must be finite and >= 0");
    }
    std::vector<double> e(e_);
    for (double& x : e) x *= c;
    return NonnegMatrix(n_, std::move(e));
}

namespace {

// Power iteration with all-ones start, max-norm normalization. Returns the
// dominant-eigenvalue estimate and whether the 1e-12 relative stop was hit.
struct PowerResult {
    double value;
    bool converged;
};

PowerResult power_iteration(const NonnegMatrix& m, int max_iters) {
    const std::size_t n = m.size();
    std::vector<double> x(n, 1.0), y(n, 0.0);
    double lambda_prev = -1.0;
    int stable = 0;
    for (int it = 0; it < max_iters; ++it) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
            y[i] = s;
            norm = std::max(norm, s);
        }
        if (norm == 0.0) {
            // M^k * ones hit zero: row sums of M^k vanish, so M is nilpotent.
            return {0.0, true};
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        const double lambda = norm;
        if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= kPowerTol * lambda) {
            if (++stable >= 3) return {lambda, true};
        } else {
            stable = 0;
        }
        lambda_prev = lambda;
    }
    return {lambda_prev, false};
}

// Gelfand estimate rho = lim ||M^(2^k)||^(1/2^k), via repeated squaring with
// log-domain normalization. Last-resort path for periodic patterns where the
// shifted power iteration still cycles.
double gelfand_radius(const NonnegMatrix& m) {
    const double norm0 = m.max_row_sum();
    if (norm0 == 0.0) return 0.0;
    NonnegMatrix a = m.scaled(1.0 / norm0);
    double log_scale = std::log(norm0);
    double weight = 1.0; // log ||M^(2^k)|| = 2^k * log_scale_k with this bookkeeping
    for (int k = 0; k < 60; ++k) {
        NonnegMatrix sq = a * a;
        const double nrm = sq.max_row_sum();
        if (nrm == 0.0) return 0.0;
        a = sq.scaled(1.0 / nrm);
        weight *= 0.5;
        log_scale += weight * std::log(nrm);
    }
    return std::exp(log_scale);
}

} // namespace

double spectral_radius(const NonnegMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m(0, 0);
    if (n == 2) {
        // Characteristic polynomial; the discriminant is >= 0 for entrywise
        // nonnegative matrices, so both roots are real.
        const double tr = m(0, 0) + m(1, 1);
        const double diff = m(0, 0) - m(1, 1);
        const double disc = diff * diff + 4.0 * m(0, 1) * m(1, 0);
        return 0.5 * (tr + std::sqrt(disc));
    }
    PowerResult direct = power_iteration(m, kMaxPowerIters);
    if (direct.converged) return direct.value;
    PowerResult shifted = power_iteration(m + NonnegMatrix::identity(n).scaled(kShiftEps),
                                          kMaxPowerIters);
    if (shifted.converged) return std::max(0.0, shifted.value - kShiftEps);
    return gelfand_radius(m);
}

bool is_convergent_to_zero(const NonnegMatrix& m) {
    return spectral_radius(m) < 1.0;
}

bool power_vanishes(const NonnegMatrix& m, int k, double tol) {
    if (k < 1) throw std::invalid_argument("power_vanishes: k must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("power_vanishes: tol must be > 0");
    NonnegMatrix p = m;
    for (int i = 1; i < k; ++i) {
        if (p.max_entry() > 1e150) return false; // still growing; avoid overflow
        p = p * m;
    }
    return p.max_entry() < tol;
}

std::optional<NonnegMatrix> try_neumann_inverse(const NonnegMatrix& m) {
    const std::size_t n = m.size();
    // Gaussian elimination with partial pivoting on (I - M), solving against I.
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = (i == j ? 1.0 : 0.0) - m(i, j);
        }
    }
    std::vector<double> inv(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        }
        const double pval = a[pivot * n + col];
        if (std::abs(pval) < 1e-14) return std::nullopt; // singular
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        }
        const double d = a[col * n + col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] /= d;
            inv[col * n + j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r * n + col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] -= f * a[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    for (double& x : inv) {
        if (x < 0.0) {
            if (x < -kNegClamp) return std::nullopt; // genuinely negative entry
            x = 0.0;
        }
    }
    return NonnegMatrix(n, std::move(inv));
}

NonnegMatrix neumann_inverse(const NonnegMatrix& m) {
    if (!is_convergent_to_zero(m)) {
        throw NotConvergentError("neumann_inverse: matrix is not convergent to zero");
    }
    auto inv = try_neumann_inverse(m);
    if (!inv) {
        throw NotConvergentError("neumann_inverse: I - M numerically singular");
    }
    return *inv;
}

} // namespace perov
