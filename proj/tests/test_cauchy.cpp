#include <gtest/gtest.h>

#include "cauchysum/cauchy.hpp"
#include "cauchysum/densela.hpp"
#include "cauchysum/random.hpp"
#include "test_helpers.hpp"

using namespace cauchysum;
using namespace cauchysum::cauchy;
using cauchysum::testing::cspec;
using cauchysum::testing::fp;
using cauchysum::testing::q;
using cauchysum::testing::qmat;
using cauchysum::testing::qs;

namespace {

const PrimeFieldContext F101 = PrimeFieldContext::make(101);

}  // namespace

TEST(CauchySpec, ValidatesPairSums) {
    try {
        cspec({1}, {-1});
        FAIL() << "expected NonInvertiblePairSum";
    } catch (const NonInvertiblePairSum& e) {
        EXPECT_EQ(e.row, 0u);
        EXPECT_EQ(e.col, 0u);
        EXPECT_STREQ(e.what(), "NonInvertiblePairSum(1, 1)");
    }
    EXPECT_THROW(cspec({1, 2}, {3, -2}), NonInvertiblePairSum);
    EXPECT_THROW(cspec({1, 2}, {3}), ShapeError);
    EXPECT_THROW(cspec({}, {}), ShapeError);
    // 50 + 51 = 101 vanishes in F_101 only
    EXPECT_NO_THROW(cspec({50}, {51}));
    EXPECT_THROW(CauchySpec<ModP>(fp({50}, F101), fp({51}, F101), F101), NonInvertiblePairSum);
}

TEST(CauchyBuild, Examples) {
    EXPECT_EQ(build(cspec({1, 2}, {3, 5})), qmat({{q(1, 4), q(1, 6)}, {q(1, 5), q(1, 7)}}));
    EXPECT_EQ(build(CauchySpec<Rational>({q(2, 3)}, {q(1, 6)})), qmat({{q(6, 5)}}));
}

TEST(CauchyDet, Examples) {
    EXPECT_EQ(det_closed(cspec({1, 2}, {3, 5})), q(1, 420));
    EXPECT_EQ(q(1, 28) - q(1, 30), q(1, 420));  // 2x2 oracle by hand
    EXPECT_EQ(det_closed(CauchySpec<Rational>({q(2, 3)}, {q(1, 6)})), q(6, 5));
    EXPECT_EQ(det_closed(cspec({1, 1}, {3, 5})), q(0));
}

TEST(CauchyInvertibility, Verdicts) {
    EXPECT_TRUE(is_invertible_spec(cspec({1, 2}, {3, 5})).invertible);

    const auto v = is_invertible_spec(cspec({1, 1}, {3, 5}));
    ASSERT_FALSE(v.invertible);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->vector, 'x');
    EXPECT_EQ(v.witness->first, 0u);
    EXPECT_EQ(v.witness->second, 1u);

    const auto wy = is_invertible_spec(cspec({1, 2}, {4, 4}));
    EXPECT_FALSE(wy.invertible);
    EXPECT_EQ(wy.witness->vector, 'y');

    // 1 and 6 are distinct integers but equal in F_5
    const auto f5 = PrimeFieldContext::make(5);
    const CauchySpec<ModP> s(fp({1, 6}, f5), fp({1, 2}, f5), f5);
    EXPECT_FALSE(is_invertible_spec(s).invertible);
    EXPECT_TRUE(det_closed(s).is_zero());
}

TEST(CauchyInverse, EntryExamples) {
    const auto s = cspec({1, 2}, {3, 5});
    // (16 * 30) / (4 * (-1) * (-2))
    EXPECT_EQ(inverse_entry_closed(s, 0, 0), q(60));
    EXPECT_EQ(inverse_entry_closed(s, 0, 1), q(-70));
    EXPECT_EQ(inverse_entry_closed(s, 1, 0), q(-84));
    EXPECT_EQ(inverse_entry_closed(s, 1, 1), q(105));
    EXPECT_THROW(inverse_entry_closed(s, 2, 0), ShapeError);
    EXPECT_THROW(inverse_entry_closed(cspec({1, 1}, {3, 5}), 0, 0), NotInvertible);

    const CauchySpec<Rational> one({q(2, 3)}, {q(1, 6)});
    EXPECT_EQ(inverse_entry_closed(one, 0, 0), q(5, 6));
}

TEST(CauchyInverse, WholeMatrixExamples) {
    EXPECT_EQ(inverse_closed(cspec({1, 2}, {3, 5})), qmat({{60, -70}, {-84, 105}}));
    EXPECT_EQ(inverse_closed(cspec({4}, {9})), qmat({{13}}));
    EXPECT_THROW(inverse_closed(cspec({1, 1}, {3, 5})), NotInvertible);
}

// Gate for the entry formula: it must agree with adj(C)/det(C) on random
// specs of every small size before anything else relies on it.
TEST(CauchyInverse, EntryFormulaMatchesAdjugateOracle) {
    auto rng = random::engine_for(100);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 50; ++t) {
            const auto s = random::random_cauchy_spec<Rational>(rng, n, {}, random::SpecKind::invertible);
            const auto c = build(s);
            const auto oracle = densela::adjugate(c).scaled(densela::det_cofactor(c).inv());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(inverse_entry_closed(s, i, j), oracle(i, j));
            ASSERT_EQ(inverse_closed(s), oracle);
        }
}

// The numerator prod_k (x_j + x_k)(x_k + y_i) is a plausible misreading of
// the entry formula; it does not give the inverse.
TEST(CauchyInverse, SumOfXsNumeratorFailsOracle) {
    const std::vector<long> xs{1, 2}, ys{3, 5};
    const std::size_t i = 0, j = 0;
    Rational num(1), den(xs[j] + ys[i]);
    for (std::size_t k = 0; k < 2; ++k) {
        num *= Rational((xs[j] + xs[k]) * (xs[k] + ys[i]));
        if (k != j) den *= Rational(xs[j] - xs[k]);
        if (k != i) den *= Rational(ys[i] - ys[k]);
    }
    EXPECT_EQ(num / den, q(15));
    EXPECT_NE(num / den, densela::inverse(build(cspec({1, 2}, {3, 5})))(0, 0));
}

TEST(CauchySums, InverseEntrySum) {
    EXPECT_EQ(inverse_entry_sum(cspec({1, 2}, {3, 5})), q(11));
    EXPECT_EQ(60 - 70 - 84 + 105, 11);
    EXPECT_EQ(inverse_entry_sum(cspec({4}, {9})), q(13));
    EXPECT_THROW(inverse_entry_sum(cspec({1, 1}, {3, 5})), NotInvertible);

    auto rng = random::engine_for(101);
    for (int t = 0; t < 50; ++t) {
        const auto s = random::random_cauchy_spec<ModP>(rng, 4, F101, random::SpecKind::invertible);
        ASSERT_EQ(inverse_entry_sum(s), densela::entry_sum(densela::inverse(build(s))));
    }
}

TEST(CauchySums, AdjugateEntrySum) {
    EXPECT_EQ(adjugate_entry_sum_closed(cspec({4}, {9})), q(1));
    EXPECT_EQ(adjugate_entry_sum_closed(cspec({1, 2}, {3, 5})), q(11, 420));
    EXPECT_EQ(densela::entry_sum(densela::adjugate(build(cspec({1, 2}, {3, 5})))), q(11, 420));

    const auto singular = cspec({1, 1}, {3, 5});
    EXPECT_EQ(adjugate_entry_sum_closed(singular), q(0));
    EXPECT_EQ(densela::entry_sum(densela::adjugate(build(singular))), q(0));
}

TEST(CauchySums, BorderedMatrix) {
    EXPECT_EQ(bordered_matrix(cspec({4}, {9})), qmat({{q(1, 13), 1}, {1, 0}}));
    const auto d = bordered_matrix(cspec({1, 2}, {3, 5}));
    EXPECT_EQ(d, qmat({{q(1, 4), q(1, 6), 1}, {q(1, 5), q(1, 7), 1}, {1, 1, 0}}));
}

TEST(CauchySums, BorderedDet) {
    EXPECT_EQ(bordered_det_closed(cspec({4}, {9})), q(-1));
    EXPECT_EQ(densela::det_cofactor(bordered_matrix(cspec({4}, {9}))), q(-1));
    EXPECT_EQ(bordered_det_closed(cspec({1, 2}, {3, 5})), q(-11, 420));
    EXPECT_EQ(densela::det_cofactor(bordered_matrix(cspec({1, 2}, {3, 5}))), q(-11, 420));
    EXPECT_EQ(bordered_det_closed(cspec({1, 1}, {3, 5})), q(0));
}

template <typename S>
void check_cauchy_properties(typename S::context_type ctx, std::uint64_t seed) {
    auto rng = random::engine_for(seed);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto kind = t % 3 == 0 ? random::SpecKind::singular : random::SpecKind::valid;
        const auto s = random::random_cauchy_spec<S>(rng, n, ctx, kind);
        const auto c = build(s);
        const S sum = s.parameter_sum();
        const S det = det_closed(s);
        ASSERT_EQ(det, densela::det_fast(c));
        ASSERT_EQ(densela::entry_sum(densela::adjugate(c)), sum * det);
        ASSERT_EQ(densela::det_fast(bordered_matrix(s)), -(sum * det));
        ASSERT_EQ(is_invertible_spec(s).invertible, det.is_invertible());
        // swapping the roles of x and y transposes C and keeps det
        ASSERT_EQ(build(s.swapped()), c.transpose());
        ASSERT_EQ(det_closed(s.swapped()), det);
        if (det.is_invertible()) {
            const auto inv = inverse_closed(s);
            ASSERT_EQ(inv, densela::inverse(c));
            ASSERT_EQ(densela::entry_sum(inv), sum);
        }
    }
}

TEST(CauchyProperties, Rational) { check_cauchy_properties<Rational>({}, 102); }
TEST(CauchyProperties, PrimeField) { check_cauchy_properties<ModP>(F101, 103); }

TEST(CauchyProperties, MediumSizeClosedInverse) {
    auto rng = random::engine_for(104);
    const auto s = random::random_cauchy_spec<Rational>(rng, 12, {}, random::SpecKind::invertible);
    const auto inv = inverse_closed(s);
    EXPECT_EQ(densela::mat_mul(build(s), inv), Matrix<Rational>::identity(12));
    EXPECT_EQ(densela::entry_sum(inv), s.parameter_sum());
}
