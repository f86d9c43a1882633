#pragma once

// Generic dense linear algebra over an exact ring. These are the reference
// routines every closed form is checked against, so none of them use any
// structure of the matrices they are given.

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::densela {

inline constexpr std::size_t kCofactorSizeGuard = 8;

template <Ring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    if (!(a.context() == b.context())) throw ContextMismatch("mat_mul: operands from different rings");
    Matrix<S> c(a.rows(), b.cols(), a.context());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            S acc = a.context().zero();
            for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, k);
            c(i, k) = std::move(acc);
        }
    return c;
}

namespace detail {

template <Ring S>
void require_square(const Matrix<S>& a, const char* what) {
    if (!a.is_square())
        throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
}

template <Ring S>
S laplace(const Matrix<S>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return a.context().one();
    if (n == 1) return a(0, 0);
    S acc = a.context().zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        S term = a(0, j) * laplace(a.minor(0, j));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

template <typename S>
inline constexpr bool is_rational_v = std::is_same_v<S, Rational>;

}  // namespace detail

/// Determinant by first-row Laplace expansion. Refuses n > 8.
template <Ring S>
S det_cofactor(const Matrix<S>& a) {
    detail::require_square(a, "det_cofactor");
    if (a.rows() > kCofactorSizeGuard)
        throw SizeGuardExceeded("det_cofactor: n = " + std::to_string(a.rows()) + " exceeds guard " +
                                std::to_string(kCofactorSizeGuard));
    return detail::laplace(a);
}

/// Fraction-free (Bareiss) elimination with row swaps. Each division is exact
/// in the ring, and intermediate values stay integral for integral input.
template <Ring S>
S det_bareiss(Matrix<S> m) {
    detail::require_square(m, "det_bareiss");
    const std::size_t n = m.rows();
    const auto& ctx = m.context();
    if (n == 0) return ctx.one();
    bool negate = false;
    S prev = ctx.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return ctx.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        const S prev_inv = prev.inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * prev_inv;
            m(i, k) = ctx.zero();
        }
        prev = m(k, k);
    }
    S d = m(n - 1, n - 1);
    return negate ? -d : d;
}

/// Gaussian elimination with pivoting on the first invertible entry.
template <Ring S>
S det_gauss(Matrix<S> m) {
    detail::require_square(m, "det_gauss");
    const std::size_t n = m.rows();
    const auto& ctx = m.context();
    S det = ctx.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && m(r, k).is_zero()) ++r;
        if (r == n) return ctx.zero();
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            det = -det;
        }
        det *= m(k, k);
        const S pivot_inv = m(k, k).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const S f = m(i, k) * pivot_inv;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Scalable determinant: Bareiss over the rationals, pivoted Gaussian
/// elimination over prime fields.
template <Ring S>
S det_fast(const Matrix<S>& a) {
    if constexpr (detail::is_rational_v<S>)
        return det_bareiss(a);
    else
        return det_gauss(a);
}

/// Classical adjugate: entry (i, j) is (-1)^(i+j) det of `a` with row j and
/// column i removed. The 1x1 adjugate is [[1]].
template <Ring S>
Matrix<S> adjugate(const Matrix<S>& a) {
    detail::require_square(a, "adjugate");
    const std::size_t n = a.rows();
    Matrix<S> adj(n, n, a.context());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S m = det_fast(a.minor(j, i));
            adj(i, j) = (i + j) % 2 == 0 ? m : -m;
        }
    return adj;
}

/// inv(det) * adj. Throws NotInvertible carrying the determinant.
template <Ring S>
Matrix<S> inverse(const Matrix<S>& a) {
    detail::require_square(a, "inverse");
    const S d = det_fast(a);
    if (!d.is_invertible()) throw NotInvertible(d.str());
    return adjugate(a).scaled(d.inv());
}

template <Ring S>
S entry_sum(const Matrix<S>& a) {
    S acc = a.context().zero();
    for (const auto& e : a.entries()) acc += e;
    return acc;
}

/// Zero-based column index.
template <Ring S>
S column_sum(const Matrix<S>& a, std::size_t j) {
    if (j >= a.cols())
        throw ShapeError("column " + std::to_string(j) + " out of range for " + std::to_string(a.cols()) +
                         " columns");
    S acc = a.context().zero();
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, j);
    return acc;
}

template <Ring S>
S trace(const Matrix<S>& a) {
    detail::require_square(a, "trace");
    S acc = a.context().zero();
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
    return acc;
}

template <Ring S>
struct WeightVectors {
    std::vector<S> xs;
    std::vector<S> ys;
};

template <Ring S>
struct ScalarPair {
    S lhs;
    S rhs;
};

/// Both sides of the weighted trace identity for A (n x m), B (m x n):
///   lhs = sum_{i,j} (x_i + y_j) A_ij B_ji
///   rhs = sum_i x_i (AB)_ii + sum_j y_j (BA)_jj
template <Ring S>
ScalarPair<S> lemma_ab_check(const Matrix<S>& a, const Matrix<S>& b, const WeightVectors<S>& w) {
    const std::size_t n = a.rows(), m = a.cols();
    if (b.rows() != m || b.cols() != n)
        throw ShapeError("lemma_ab_check: B must be " + std::to_string(m) + "x" + std::to_string(n));
    if (w.xs.size() != n || w.ys.size() != m) throw ShapeError("lemma_ab_check: weight lengths do not match");
    const auto& ctx = a.context();

    S lhs = ctx.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) lhs += (w.xs[i] + w.ys[j]) * a(i, j) * b(j, i);

    const auto ab = mat_mul(a, b);
    const auto ba = mat_mul(b, a);
    S rhs = ctx.zero();
    for (std::size_t i = 0; i < n; ++i) rhs += w.xs[i] * ab(i, i);
    for (std::size_t j = 0; j < m; ++j) rhs += w.ys[j] * ba(j, j);
    return {std::move(lhs), std::move(rhs)};
}

/// `a` with a row of ones appended, a column of ones appended, and 0 in the
/// new corner.
template <Ring S>
Matrix<S> border_with_ones(const Matrix<S>& a) {
    detail::require_square(a, "border_with_ones");
    const std::size_t n = a.rows();
    const auto& ctx = a.context();
    Matrix<S> b(n + 1, n + 1, ctx);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
        b(i, n) = ctx.one();
        b(n, i) = ctx.one();
    }
    return b;
}

/// Returns (det of the ones-bordered matrix, entry sum of adj(a)). The first
/// is always the negative of the second.
template <Ring S>
std::pair<S, S> border_det_general(const Matrix<S>& a) {
    detail::require_square(a, "border_det_general");
    return {det_fast(border_with_ones(a)), entry_sum(adjugate(a))};
}

}  // namespace cauchysum::densela
