#pragma once

// Min matrices F = (min(x_i, y_j)) over the rationals.
//
// The determinant closed form uses the mixed second difference
//   f_kk - f_{k,k-1} - f_{k-1,k} + f_{k-1,k-1}
// of consecutive entries. A variant with f_{k-1,k+1} as the last term is out
// of range at k = n and does not reproduce the determinant.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cauchysum/densela.hpp"
#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::minmat {

struct MinSpec {
    std::vector<Rational> xs;
    std::vector<Rational> ys;

    MinSpec(std::vector<Rational> x, std::vector<Rational> y) : xs(std::move(x)), ys(std::move(y)) {
        if (xs.empty()) throw ShapeError("MinSpec: n must be at least 1");
        if (xs.size() != ys.size())
            throw ShapeError("MinSpec: |xs| = " + std::to_string(xs.size()) + " but |ys| = " +
                             std::to_string(ys.size()));
    }

    std::size_t size() const { return xs.size(); }

    /// Smallest of all 2n parameters.
    Rational min_value() const {
        return std::min(*std::min_element(xs.begin(), xs.end()), *std::min_element(ys.begin(), ys.end()));
    }
};

/// x ascending, y ascending, x_1 <= y_1. `swapped` records whether the x and
/// y roles were exchanged to get there (the matrix is then transposed).
struct SortedMinSpec {
    MinSpec spec;
    bool swapped = false;

    /// Wraps an already-sorted spec; throws UnsortedInput otherwise.
    static SortedMinSpec checked(MinSpec s, bool swapped = false);
};

namespace detail {

inline bool ascending(const std::vector<Rational>& v) { return std::is_sorted(v.begin(), v.end()); }

inline void require_ascending(const MinSpec& s) {
    if (!ascending(s.xs)) throw UnsortedInput("min-matrix: xs are not in ascending order");
    if (!ascending(s.ys)) throw UnsortedInput("min-matrix: ys are not in ascending order");
}

inline void require_sorted(const MinSpec& s) {
    require_ascending(s);
    if (s.ys.front() < s.xs.front()) throw UnsortedInput("min-matrix: x_1 > y_1");
}

}  // namespace detail

inline SortedMinSpec SortedMinSpec::checked(MinSpec s, bool swapped) {
    detail::require_sorted(s);
    return SortedMinSpec{std::move(s), swapped};
}

inline Matrix<Rational> build(const MinSpec& spec) {
    const std::size_t n = spec.size();
    Matrix<Rational> f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f(i, j) = std::min(spec.xs[i], spec.ys[j]);
    return f;
}

/// Sort xs and ys, then exchange the roles of x and y if that is needed to get
/// x_1 <= y_1. Permutations are not recorded: every quantity computed from the
/// result is insensitive to them or defined on the sorted matrix itself.
inline SortedMinSpec normalize(const MinSpec& spec) {
    auto xs = spec.xs;
    auto ys = spec.ys;
    std::stable_sort(xs.begin(), xs.end());
    std::stable_sort(ys.begin(), ys.end());
    const bool swap = ys.front() < xs.front();
    if (swap) std::swap(xs, ys);
    return SortedMinSpec{MinSpec(std::move(xs), std::move(ys)), swap};
}

/// Sum of all entries of F^-1, which is 1 / min(all parameters). Invertibility
/// is decided by the generic determinant.
inline Rational inverse_entry_sum(const MinSpec& spec) {
    const auto d = densela::det_fast(build(spec));
    if (d.is_zero()) throw NotInvertible(d.str());
    return spec.min_value().inv();
}

/// Column sums of F^-1 for a sorted spec: (1/x_1, 0, ..., 0).
inline std::vector<Rational> inverse_column_sums(const SortedMinSpec& sorted) {
    const auto& s = sorted.spec;
    detail::require_sorted(s);
    const auto d = densela::det_fast(build(s));
    if (d.is_zero()) throw NotInvertible(d.str());
    std::vector<Rational> sums(s.size(), Rational(0));
    sums[0] = s.xs.front().inv();
    return sums;
}

namespace detail {

inline Rational f(const MinSpec& s, std::size_t i, std::size_t j) { return std::min(s.xs[i], s.ys[j]); }

inline Rational mixed_difference(const MinSpec& s, std::size_t k) {
    return f(s, k, k) - f(s, k, k - 1) - f(s, k - 1, k) + f(s, k - 1, k - 1);
}

}  // namespace detail

/// det F = f_11 * prod_{k=2..n} (f_kk - f_{k,k-1} - f_{k-1,k} + f_{k-1,k-1}).
/// Requires xs and ys ascending; x_1 <= y_1 is not needed.
inline Rational det_closed(const MinSpec& spec) {
    detail::require_ascending(spec);
    Rational d = detail::f(spec, 0, 0);
    for (std::size_t k = 1; k < spec.size(); ++k) d *= detail::mixed_difference(spec, k);
    return d;
}

inline Rational det_closed(const SortedMinSpec& sorted) { return det_closed(sorted.spec); }

/// True iff one factor of the determinant product vanishes.
inline bool det_zero_predicate(const MinSpec& spec) {
    detail::require_ascending(spec);
    if (detail::f(spec, 0, 0).is_zero()) return true;
    for (std::size_t k = 1; k < spec.size(); ++k)
        if (detail::mixed_difference(spec, k).is_zero()) return true;
    return false;
}

inline bool det_zero_predicate(const SortedMinSpec& sorted) { return det_zero_predicate(sorted.spec); }

}  // namespace cauchysum::minmat
