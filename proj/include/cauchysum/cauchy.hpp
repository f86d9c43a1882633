#pragma once

// Cauchy matrices C = (1 / (x_i + y_j)) and their closed forms: the
// determinant, the explicit inverse, the inverse and adjugate entry sums, and
// the determinant of C bordered by ones.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchysum/densela.hpp"
#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::cauchy {

/// Parameter vectors of a Cauchy matrix. Construction validates that every
/// pair sum x_i + y_j is invertible.
template <Ring S>
class CauchySpec {
public:
    using context_type = typename S::context_type;

    CauchySpec(std::vector<S> xs, std::vector<S> ys, context_type ctx = {})
        : xs_(std::move(xs)), ys_(std::move(ys)), ctx_(ctx) {
        if (xs_.empty()) throw ShapeError("CauchySpec: n must be at least 1");
        if (xs_.size() != ys_.size())
            throw ShapeError("CauchySpec: |xs| = " + std::to_string(xs_.size()) + " but |ys| = " +
                             std::to_string(ys_.size()));
        for (const auto& v : xs_)
            if (!(v.context() == ctx_)) throw ContextMismatch("CauchySpec: x from a different ring context");
        for (const auto& v : ys_)
            if (!(v.context() == ctx_)) throw ContextMismatch("CauchySpec: y from a different ring context");
        for (std::size_t i = 0; i < xs_.size(); ++i)
            for (std::size_t j = 0; j < ys_.size(); ++j)
                if (!(xs_[i] + ys_[j]).is_invertible()) throw NonInvertiblePairSum(i, j);
    }

    std::size_t size() const { return xs_.size(); }
    const std::vector<S>& xs() const { return xs_; }
    const std::vector<S>& ys() const { return ys_; }
    const context_type& context() const { return ctx_; }

    /// Same matrix family with the roles of x and y exchanged (builds the transpose).
    CauchySpec swapped() const { return CauchySpec(ys_, xs_, ctx_); }

    /// Sum of all 2n parameters.
    S parameter_sum() const {
        S acc = ctx_.zero();
        for (const auto& v : xs_) acc += v;
        for (const auto& v : ys_) acc += v;
        return acc;
    }

private:
    std::vector<S> xs_;
    std::vector<S> ys_;
    context_type ctx_;
};

struct InvertibilityVerdict {
    struct Witness {
        char vector;  // 'x' or 'y'
        std::size_t first;   // zero-based
        std::size_t second;  // zero-based
    };
    bool invertible = true;
    std::optional<Witness> witness;

    std::string describe() const {
        if (invertible) return "invertible";
        return std::string("not invertible: ") + witness->vector + "_" + std::to_string(witness->first + 1) +
               " - " + witness->vector + "_" + std::to_string(witness->second + 1) + " is not invertible";
    }
};

template <Ring S>
Matrix<S> build(const CauchySpec<S>& spec) {
    const std::size_t n = spec.size();
    Matrix<S> c(n, n, spec.context());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = (spec.xs()[i] + spec.ys()[j]).inv();
    return c;
}

/// prod_{i<j} (x_i - x_j)(y_i - y_j) / prod_{i,j} (x_i + y_j)
template <Ring S>
S det_closed(const CauchySpec<S>& spec) {
    const auto& xs = spec.xs();
    const auto& ys = spec.ys();
    const std::size_t n = spec.size();
    S num = spec.context().one();
    S den = spec.context().one();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) num *= (xs[i] - xs[j]) * (ys[i] - ys[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) den *= xs[i] + ys[j];
    return num * den.inv();
}

/// C is invertible iff the x's are pairwise strongly distinct (every
/// difference invertible) and so are the y's.
template <Ring S>
InvertibilityVerdict is_invertible_spec(const CauchySpec<S>& spec) {
    auto scan = [](const std::vector<S>& v, char name) -> std::optional<InvertibilityVerdict::Witness> {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (!(v[i] - v[j]).is_invertible()) return InvertibilityVerdict::Witness{name, i, j};
        return std::nullopt;
    };
    if (auto w = scan(spec.xs(), 'x')) return {false, w};
    if (auto w = scan(spec.ys(), 'y')) return {false, w};
    return {true, std::nullopt};
}

namespace detail {

template <Ring S>
void require_invertible(const CauchySpec<S>& spec) {
    const auto verdict = is_invertible_spec(spec);
    if (!verdict.invertible) throw NotInvertible(verdict.describe());
}

/// Per-index factors of the closed-form inverse:
///   col[j] = prod_k (x_j + y_k) / prod_{k != j} (x_j - x_k)
///   row[i] = prod_k (x_k + y_i) / prod_{k != i} (y_i - y_k)
/// so that (C^-1)_{ij} = col[j] * row[i] / (x_j + y_i).
template <Ring S>
struct InverseFactors {
    std::vector<S> col;
    std::vector<S> row;
};

template <Ring S>
S column_factor(const CauchySpec<S>& spec, std::size_t j) {
    const auto& xs = spec.xs();
    const auto& ys = spec.ys();
    S num = spec.context().one();
    S den = spec.context().one();
    for (std::size_t k = 0; k < spec.size(); ++k) {
        num *= xs[j] + ys[k];
        if (k != j) den *= xs[j] - xs[k];
    }
    return num * den.inv();
}

template <Ring S>
S row_factor(const CauchySpec<S>& spec, std::size_t i) {
    const auto& xs = spec.xs();
    const auto& ys = spec.ys();
    S num = spec.context().one();
    S den = spec.context().one();
    for (std::size_t k = 0; k < spec.size(); ++k) {
        num *= xs[k] + ys[i];
        if (k != i) den *= ys[i] - ys[k];
    }
    return num * den.inv();
}

template <Ring S>
InverseFactors<S> inverse_factors(const CauchySpec<S>& spec) {
    InverseFactors<S> f;
    f.col.reserve(spec.size());
    f.row.reserve(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k) {
        f.col.push_back(column_factor(spec, k));
        f.row.push_back(row_factor(spec, k));
    }
    return f;
}

}  // namespace detail

/// Single entry (zero-based i, j) of C^-1:
///   prod_k (x_j + y_k)(x_k + y_i) / ((x_j + y_i) prod_{k != j}(x_j - x_k) prod_{k != i}(y_i - y_k))
template <Ring S>
S inverse_entry_closed(const CauchySpec<S>& spec, std::size_t i, std::size_t j) {
    if (i >= spec.size() || j >= spec.size())
        throw ShapeError("inverse entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for n = " + std::to_string(spec.size()));
    detail::require_invertible(spec);
    return detail::column_factor(spec, j) * detail::row_factor(spec, i) * (spec.xs()[j] + spec.ys()[i]).inv();
}

/// Whole inverse in O(n^2) ring operations: O(n) per row/column factor, then
/// O(1) per entry.
template <Ring S>
Matrix<S> inverse_closed(const CauchySpec<S>& spec) {
    detail::require_invertible(spec);
    const std::size_t n = spec.size();
    const auto f = detail::inverse_factors(spec);
    Matrix<S> out(n, n, spec.context());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = f.col[j] * f.row[i] * (spec.xs()[j] + spec.ys()[i]).inv();
    return out;
}

/// Sum of all entries of C^-1, which is x_1 + ... + x_n + y_1 + ... + y_n.
template <Ring S>
S inverse_entry_sum(const CauchySpec<S>& spec) {
    detail::require_invertible(spec);
    return spec.parameter_sum();
}

/// Sum of all entries of adj(C) = (sum x + sum y) * det C. Holds for singular C.
template <Ring S>
S adjugate_entry_sum_closed(const CauchySpec<S>& spec) {
    return spec.parameter_sum() * det_closed(spec);
}

/// C with a row of ones below, a column of ones to the right, and 0 in the corner.
template <Ring S>
Matrix<S> bordered_matrix(const CauchySpec<S>& spec) {
    return densela::border_with_ones(build(spec));
}

/// det of the bordered matrix = -(sum x + sum y) * det C.
template <Ring S>
S bordered_det_closed(const CauchySpec<S>& spec) {
    return -adjugate_entry_sum_closed(spec);
}

}  // namespace cauchysum::cauchy
