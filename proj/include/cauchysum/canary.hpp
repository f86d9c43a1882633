#pragma once

// Floating-point Cauchy inversion as an ill-conditioning canary.
//
// The sum of all entries of C^-1 is known exactly (the sum of the 2n
// parameters), so it costs O(n) to score any approximate inverse. Two
// inverters are scored: generic Gaussian elimination with partial pivoting,
// and the closed-form entry formula evaluated in doubles.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cauchysum/cauchy.hpp"
#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::canary {

class FloatMatrix {
public:
    FloatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    FloatMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw ShapeError("FloatMatrix: entry count does not match shape");
        check_finite();
    }

    static FloatMatrix from_exact(const Matrix<Rational>& m) {
        std::vector<double> e;
        e.reserve(m.rows() * m.cols());
        for (const auto& v : m.entries()) e.push_back(v.to_double());
        return FloatMatrix(m.rows(), m.cols(), std::move(e));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<double>& entries() const { return data_; }

    void check_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) throw Error("FloatMatrix: non-finite entry");
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

enum class Method { closed_form, gauss_pp };

inline std::string to_string(Method m) { return m == Method::closed_form ? "closed_form" : "gauss_pp"; }

struct CanaryReport {
    std::size_t n = 0;
    Method method = Method::gauss_pp;
    double entry_sum_residual = 0.0;  // |sum of entries of the approximate inverse - (sum x + sum y)|
    double identity_residual = 0.0;   // max |(C * approx inverse - I)_ij|
    double elapsed = 0.0;             // seconds
};

inline constexpr const char* kCsvHeader = "n,method,entry_sum_residual,identity_residual,elapsed";

inline void write_csv_row(std::ostream& os, const CanaryReport& r) {
    const auto old_precision = os.precision(17);
    os << r.n << ',' << to_string(r.method) << ',' << r.entry_sum_residual << ',' << r.identity_residual << ','
       << r.elapsed << '\n';
    os.precision(old_precision);
}

/// x_i = i, y_j = j - 1 (one-based), so C is the n x n Hilbert matrix.
inline cauchy::CauchySpec<Rational> hilbert_spec(std::size_t n) {
    if (n == 0) throw ShapeError("hilbert_spec: n must be at least 1");
    std::vector<Rational> xs, ys;
    for (std::size_t k = 1; k <= n; ++k) {
        xs.emplace_back(static_cast<long>(k));
        ys.emplace_back(static_cast<long>(k) - 1);
    }
    return {std::move(xs), std::move(ys)};
}

inline FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("FloatMatrix multiply: shape mismatch");
    FloatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Gauss-Jordan inversion with partial pivoting on [M | I].
inline FloatMatrix invert_gauss_pp(const FloatMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("invert_gauss_pp: matrix is not square");
    const std::size_t n = m.rows();
    FloatMatrix a = m;
    FloatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1.0;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
        if (a(p, k) == 0.0) throw ExactZeroPivot("invert_gauss_pp: zero pivot in column " + std::to_string(k));
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const double pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    inv.check_finite();
    return inv;
}

/// Closed-form inverse entries evaluated in double precision.
inline FloatMatrix invert_closed_float(const cauchy::CauchySpec<Rational>& spec) {
    if (const auto v = cauchy::is_invertible_spec(spec); !v.invertible) throw NotInvertible(v.describe());
    const std::size_t n = spec.size();
    std::vector<double> x, y;
    for (const auto& v : spec.xs()) x.push_back(v.to_double());
    for (const auto& v : spec.ys()) y.push_back(v.to_double());

    std::vector<double> col(n), row(n);
    for (std::size_t t = 0; t < n; ++t) {
        double cn = 1.0, cd = 1.0, rn = 1.0, rd = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            cn *= x[t] + y[k];
            rn *= x[k] + y[t];
            if (k != t) {
                cd *= x[t] - x[k];
                rd *= y[t] - y[k];
            }
        }
        col[t] = cn / cd;
        row[t] = rn / rd;
    }
    FloatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = col[j] * row[i] / (x[j] + y[i]);
    out.check_finite();
    return out;
}

namespace detail {

inline CanaryReport score(const FloatMatrix& c, const FloatMatrix& approx, double truth, Method m, double elapsed) {
    CanaryReport r;
    r.n = c.rows();
    r.method = m;
    r.elapsed = elapsed;
    double sum = 0.0;
    for (double v : approx.entries()) sum += v;
    r.entry_sum_residual = std::abs(sum - truth);
    const FloatMatrix prod = multiply(c, approx);
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            r.identity_residual = std::max(r.identity_residual, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
    return r;
}

template <typename F>
std::pair<FloatMatrix, double> timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    FloatMatrix m = f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return {std::move(m), dt.count()};
}

}  // namespace detail

/// Scores both inverters against the exact parameter sum, converted to double
/// only at the end. Returns {closed_form, gauss_pp}.
inline std::pair<CanaryReport, CanaryReport> run_canary(const cauchy::CauchySpec<Rational>& spec) {
    const double truth = spec.parameter_sum().to_double();
    const FloatMatrix c = FloatMatrix::from_exact(cauchy::build(spec));
    auto [closed, t_closed] = detail::timed([&] { return invert_closed_float(spec); });
    auto [gauss, t_gauss] = detail::timed([&] { return invert_gauss_pp(c); });
    return {detail::score(c, closed, truth, Method::closed_form, t_closed),
            detail::score(c, gauss, truth, Method::gauss_pp, t_gauss)};
}

}  // namespace cauchysum::canary
