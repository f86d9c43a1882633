#pragma once

// Seeded generators for random scalars, matrices and specs. Every generator
// takes its engine explicitly; there is no global RNG.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "cauchysum/cauchy.hpp"
#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/minmat.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::random {

using Engine = std::mt19937_64;

/// Independent stream for (seed, stream, trial), so trials can be generated in
/// any order and still reproduce.
inline Engine engine_for(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t trial = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return Engine(seq);
}

inline long uniform_int(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Engine& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Numerator in [-9, 9], denominator in [1, 9].
inline Rational random_rational(Engine& rng, long bound = 9) {
    return Rational(uniform_int(rng, -bound, bound), uniform_int(rng, 1, bound));
}

inline ModP random_modp(Engine& rng, const PrimeFieldContext& ctx) {
    return ModP(uniform_int(rng, 0, static_cast<long>(ctx.p) - 1), ctx);
}

template <Ring S>
S random_scalar(Engine& rng, const typename S::context_type& ctx) {
    if constexpr (std::is_same_v<S, Rational>)
        return random_rational(rng);
    else
        return random_modp(rng, ctx);
}

template <Ring S>
std::vector<S> random_vector(Engine& rng, std::size_t n, const typename S::context_type& ctx) {
    std::vector<S> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) v.push_back(random_scalar<S>(rng, ctx));
    return v;
}

template <Ring S>
Matrix<S> random_matrix(Engine& rng, std::size_t rows, std::size_t cols, const typename S::context_type& ctx) {
    return Matrix<S>(rows, cols, random_vector<S>(rng, rows * cols, ctx), ctx);
}

enum class SpecKind {
    valid,       // only the pair sums are constrained
    invertible,  // xs and ys additionally strongly distinct
    singular,    // a repeated x or y is forced in (n >= 2)
};

namespace detail {

template <Ring S>
bool pair_sums_ok(const std::vector<S>& xs, const std::vector<S>& ys) {
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (!(x + y).is_invertible()) return false;
    return true;
}

template <Ring S>
bool strongly_distinct(const std::vector<S>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!(v[i] - v[j]).is_invertible()) return false;
    return true;
}

}  // namespace detail

/// Rejection-sampled Cauchy spec of size n. A singular request with n = 1
/// falls back to a merely valid spec.
template <Ring S>
cauchy::CauchySpec<S> random_cauchy_spec(Engine& rng, std::size_t n, const typename S::context_type& ctx,
                                         SpecKind kind = SpecKind::valid) {
    if (n == 0) throw ShapeError("random_cauchy_spec: n must be at least 1");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        auto xs = random_vector<S>(rng, n, ctx);
        auto ys = random_vector<S>(rng, n, ctx);
        if (kind == SpecKind::singular && n >= 2) {
            auto& v = coin(rng) ? xs : ys;
            const auto src = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
            auto dst = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
            if (dst >= src) ++dst;
            v[dst] = v[src];
        }
        if (!detail::pair_sums_ok(xs, ys)) continue;
        if (kind == SpecKind::invertible && !(detail::strongly_distinct(xs) && detail::strongly_distinct(ys)))
            continue;
        return cauchy::CauchySpec<S>(std::move(xs), std::move(ys), ctx);
    }
    throw Error("random_cauchy_spec: rejection sampling did not converge");
}

/// Random rational min-matrix spec. With `balanced`, the 2n values are
/// distinct and alternate between x and y in sorted order (which keeps F
/// invertible), then each vector is shuffled. Otherwise values come from a
/// small pool so ties and unbalanced interleavings are common.
inline minmat::MinSpec random_min_spec(Engine& rng, std::size_t n, bool balanced = false) {
    if (n == 0) throw ShapeError("random_min_spec: n must be at least 1");
    std::vector<Rational> xs, ys;
    if (!balanced) {
        for (std::size_t k = 0; k < n; ++k) {
            xs.push_back(random_rational(rng, 4));
            ys.push_back(random_rational(rng, 4));
        }
        return minmat::MinSpec(std::move(xs), std::move(ys));
    }
    std::vector<Rational> pool;
    while (pool.size() < 2 * n) {
        auto v = random_rational(rng);
        if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(std::move(v));
    }
    std::sort(pool.begin(), pool.end());
    const bool x_first = coin(rng);
    for (std::size_t k = 0; k < pool.size(); ++k) ((k % 2 == 0) == x_first ? xs : ys).push_back(pool[k]);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    return minmat::MinSpec(std::move(xs), std::move(ys));
}

}  // namespace cauchysum::random
