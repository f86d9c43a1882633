#include <gtest/gtest.h>

#include "cauchysum/densela.hpp"
#include "cauchysum/random.hpp"
#include "test_helpers.hpp"

using namespace cauchysum;
using namespace cauchysum::densela;
using cauchysum::testing::q;
using cauchysum::testing::qmat;
using cauchysum::testing::qs;

namespace {

const PrimeFieldContext F101 = PrimeFieldContext::make(101);

}  // namespace

TEST(MatMul, HandExample) {
    const auto a = qmat({{1, 2}, {3, 4}});
    const auto b = qmat({{5, 6}, {7, 8}});
    EXPECT_EQ(mat_mul(a, b), qmat({{19, 22}, {43, 50}}));
    EXPECT_EQ(mat_mul(b, a), qmat({{23, 34}, {31, 46}}));
}

TEST(MatMul, IdentityAndDot) {
    auto rng = random::engine_for(10);
    const auto a = random::random_matrix<Rational>(rng, 3, 3, {});
    EXPECT_EQ(mat_mul(a, Matrix<Rational>::identity(3)), a);
    const auto dot = mat_mul(qmat({{1, 2}}), qmat({{3}, {4}}));
    EXPECT_EQ(dot, qmat({{11}}));
}

TEST(MatMul, ShapeMismatch) { EXPECT_THROW(mat_mul(qmat({{1, 2}}), qmat({{1, 2}})), ShapeError); }

TEST(Determinant, Cofactor) {
    EXPECT_EQ(det_cofactor(qmat({{q(7, 3)}})), q(7, 3));
    EXPECT_EQ(det_cofactor(qmat({{1, 1}, {2, 3}})), q(1));
    EXPECT_EQ(det_cofactor(qmat({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), q(0));
    EXPECT_EQ(det_cofactor(Matrix<Rational>(0, 0)), q(1));
}

TEST(Determinant, CofactorGuards) {
    EXPECT_THROW(det_cofactor(qmat({{1, 2}})), ShapeError);
    EXPECT_THROW(det_cofactor(Matrix<Rational>::identity(9)), SizeGuardExceeded);
    EXPECT_EQ(det_cofactor(Matrix<Rational>::identity(8)), q(1));
}

TEST(Determinant, Fast) {
    EXPECT_EQ(det_fast(qmat({{1, 2, 3, 4}, {0, 1, 5, 2}, {1, 2, 3, 4}, {9, 9, 9, 1}})), q(0));
    EXPECT_EQ(det_fast(Matrix<ModP>::from_rows({{F101.from_int(2), F101.zero()}, {F101.zero(), F101.from_int(3)}},
                                               F101)),
              F101.from_int(6));
    // zero leading pivot forces a row swap
    EXPECT_EQ(det_fast(qmat({{0, 1}, {1, 0}})), q(-1));
    EXPECT_EQ(det_fast(qmat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), q(-1));
    EXPECT_THROW(det_fast(qmat({{1, 2}})), ShapeError);
}

template <typename S>
void check_det_paths(typename S::context_type ctx, std::uint64_t seed) {
    auto rng = random::engine_for(seed);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        auto a = random::random_matrix<S>(rng, n, n, ctx);
        if (t % 5 == 0 && n > 1)  // duplicate a row now and then
            for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j);
        const auto dc = det_cofactor(a);
        ASSERT_EQ(det_fast(a), dc);
        ASSERT_EQ(det_bareiss(a), dc);
        ASSERT_EQ(det_gauss(a), dc);
    }
}

TEST(DeterminantProperties, FastMatchesCofactorRational) { check_det_paths<Rational>({}, 11); }
TEST(DeterminantProperties, FastMatchesCofactorPrimeField) { check_det_paths<ModP>(F101, 12); }

TEST(DeterminantProperties, Multiplicative) {
    auto rng = random::engine_for(13);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 5));
        const auto a = random::random_matrix<Rational>(rng, n, n, {});
        const auto b = random::random_matrix<Rational>(rng, n, n, {});
        ASSERT_EQ(det_fast(mat_mul(a, b)), det_fast(a) * det_fast(b));
    }
}

TEST(Adjugate, Examples) {
    EXPECT_EQ(adjugate(qmat({{q(5, 2)}})), qmat({{1}}));
    EXPECT_EQ(adjugate(qmat({{1, 1}, {2, 3}})), qmat({{3, -1}, {-2, 1}}));
    EXPECT_THROW(adjugate(qmat({{1, 2}})), ShapeError);
}

template <typename S>
void check_adjugate(typename S::context_type ctx, std::uint64_t seed) {
    auto rng = random::engine_for(seed);
    for (int t = 0; t < 150; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto a = random::random_matrix<S>(rng, n, n, ctx);
        const auto adj = adjugate(a);
        const auto expected = Matrix<S>::identity(n, ctx).scaled(det_cofactor(a));
        ASSERT_EQ(mat_mul(a, adj), expected);
        ASSERT_EQ(mat_mul(adj, a), expected);
    }
}

TEST(AdjugateProperties, ProductIsDetTimesIdentityRational) { check_adjugate<Rational>({}, 14); }
TEST(AdjugateProperties, ProductIsDetTimesIdentityPrimeField) { check_adjugate<ModP>(F101, 15); }

TEST(Inverse, Examples) {
    const auto c = qmat({{q(1, 4), q(1, 6)}, {q(1, 5), q(1, 7)}});
    EXPECT_EQ(inverse(c), qmat({{60, -70}, {-84, 105}}));
    EXPECT_EQ(inverse(Matrix<Rational>::identity(3)), Matrix<Rational>::identity(3));
    try {
        inverse(qmat({{1, 2}, {2, 4}}));
        FAIL() << "expected NotInvertible";
    } catch (const NotInvertible& e) {
        EXPECT_EQ(e.value(), "0");
    }
}

TEST(InverseProperties, TwoSidedIdentity) {
    auto rng = random::engine_for(16);
    int inverted = 0;
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto a = random::random_matrix<ModP>(rng, n, n, F101);
        if (!det_fast(a).is_invertible()) continue;
        const auto ai = inverse(a);
        ASSERT_EQ(mat_mul(a, ai), Matrix<ModP>::identity(n, F101));
        ASSERT_EQ(mat_mul(ai, a), Matrix<ModP>::identity(n, F101));
        ++inverted;
    }
    EXPECT_GT(inverted, 80);
}

TEST(Sums, EntryColumnTrace) {
    EXPECT_EQ(entry_sum(qmat({{60, -70}, {-84, 105}})), q(11));
    EXPECT_EQ(entry_sum(Matrix<Rational>(3, 2)), q(0));
    const auto m = qmat({{3, -1}, {-2, 1}});
    EXPECT_EQ(column_sum(m, 0), q(1));
    EXPECT_EQ(column_sum(m, 1), q(0));
    EXPECT_THROW(column_sum(m, 2), ShapeError);
    EXPECT_EQ(trace(m), q(4));
    EXPECT_THROW(trace(qmat({{1, 2}})), ShapeError);
}

TEST(LemmaAB, HandExample) {
    const auto [lhs, rhs] = lemma_ab_check(qmat({{1, 2}, {3, 4}}), qmat({{5, 6}, {7, 8}}),
                                           WeightVectors<Rational>{qs({1, 2}), qs({3, 4})});
    EXPECT_EQ(lhs, q(372));
    EXPECT_EQ(rhs, q(372));
}

TEST(LemmaAB, ZeroMatrix) {
    const auto [lhs, rhs] =
        lemma_ab_check(Matrix<Rational>(2, 3), qmat({{1, 2}, {3, 4}, {5, 6}}),
                       WeightVectors<Rational>{qs({1, 2}), qs({3, 4, 5})});
    EXPECT_EQ(lhs, q(0));
    EXPECT_EQ(rhs, q(0));
}

TEST(LemmaAB, RectangularDirectExpansion) {
    // A = [a b] (1x2), B = [c; d] (2x1): both sides are (x+y1) a c + (x+y2) b d.
    const auto [lhs, rhs] = lemma_ab_check(qmat({{2, 3}}), qmat({{5}, {7}}),
                                           WeightVectors<Rational>{qs({1}), {q(1, 2), q(-4)}});
    const Rational expected = (q(1) + q(1, 2)) * q(10) + (q(1) - q(4)) * q(21);
    EXPECT_EQ(lhs, expected);
    EXPECT_EQ(rhs, expected);
}

TEST(LemmaAB, ShapeErrors) {
    const auto a = qmat({{1, 2}});
    EXPECT_THROW(lemma_ab_check(a, qmat({{1, 2}}), WeightVectors<Rational>{qs({1}), qs({1, 2})}), ShapeError);
    EXPECT_THROW(lemma_ab_check(a, qmat({{1}, {2}}), WeightVectors<Rational>{qs({1, 2}), qs({1, 2})}), ShapeError);
}

TEST(LemmaABProperties, RandomShapes) {
    auto rng = random::engine_for(17);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto m = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto a = random::random_matrix<Rational>(rng, n, m, {});
        const auto b = random::random_matrix<Rational>(rng, m, n, {});
        WeightVectors<Rational> w{random::random_vector<Rational>(rng, n, {}),
                                  random::random_vector<Rational>(rng, m, {})};
        const auto [lhs, rhs] = lemma_ab_check(a, b, w);
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(BorderDet, Examples) {
    const auto [d1, s1] = border_det_general(qmat({{q(3, 5)}}));
    EXPECT_EQ(d1, q(-1));
    EXPECT_EQ(s1, q(1));
    const auto [d2, s2] = border_det_general(Matrix<Rational>::identity(2));
    EXPECT_EQ(d2, q(-2));
    EXPECT_EQ(s2, q(2));
    EXPECT_EQ(border_with_ones(qmat({{4}})), qmat({{4, 1}, {1, 0}}));
}

TEST(BorderDetProperties, SumsToZero) {
    auto rng = random::engine_for(18);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
        const auto a = random::random_matrix<Rational>(rng, n, n, {});
        const auto [det_b, adj_sum] = border_det_general(a);
        ASSERT_EQ(det_b + adj_sum, q(0));
        ASSERT_EQ(det_b, det_cofactor(border_with_ones(a)));
    }
}
