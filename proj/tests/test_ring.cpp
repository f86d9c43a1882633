#include <gtest/gtest.h>

#include "cauchysum/random.hpp"
#include "cauchysum/ring.hpp"
#include "test_helpers.hpp"

using namespace cauchysum;
using cauchysum::testing::q;

namespace {

const PrimeFieldContext F101 = PrimeFieldContext::make(101);

}  // namespace

TEST(Rational, AddsExactly) { EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6)); }

TEST(Rational, NormalizesOnConstruction) {
    const Rational r(-2, 4);
    EXPECT_EQ(r.num(), -1);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, Inverse) {
    EXPECT_EQ(q(3, 7).inv(), q(7, 3));
    EXPECT_THROW(q(0).inv(), NotInvertible);
    EXPECT_FALSE(is_invertible(q(0)));
    EXPECT_TRUE(is_invertible(q(-5, 9)));
}

TEST(Rational, ZeroDenominatorRejected) { EXPECT_THROW(Rational(1, 0), NotInvertible); }

TEST(Rational, Compare) {
    EXPECT_EQ(compare(q(1, 3), q(1, 2)), std::strong_ordering::less);
    EXPECT_EQ(compare(q(-1), q(-2)), std::strong_ordering::greater);
    EXPECT_EQ(compare(q(2, 4), q(1, 2)), std::strong_ordering::equal);
}

TEST(Rational, ParseAndRender) {
    EXPECT_EQ(Rational::parse("3"), q(3));
    EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
    EXPECT_EQ(Rational::parse("+1/2"), q(1, 2));
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(PrimeField, ReducesModulo) {
    EXPECT_EQ(F101.from_int(100) + F101.from_int(2), F101.from_int(1));
    EXPECT_EQ(F101.from_int(-1).value(), 100u);
    EXPECT_EQ(F101.from_int(101).value(), 0u);
    EXPECT_FALSE(F101.from_int(101).is_invertible());
}

TEST(PrimeField, InverseByExtendedEuclid) {
    EXPECT_EQ(F101.from_int(2).inv().value(), 51u);
    EXPECT_THROW(F101.from_int(0).inv(), NotInvertible);
    for (long v = 1; v < 101; ++v) EXPECT_EQ(F101.from_int(v) * F101.from_int(v).inv(), F101.one());
}

TEST(PrimeField, Parse) {
    EXPECT_EQ(F101.parse("205").value(), 3u);
    EXPECT_EQ(F101.parse("-1").value(), 100u);
    EXPECT_EQ(F101.parse("1/2").value(), 51u);
    EXPECT_THROW(F101.parse("1/101"), ParseError);
}

TEST(PrimeField, ContextMismatch) {
    const auto f5 = PrimeFieldContext::make(5);
    EXPECT_THROW(F101.from_int(1) + f5.from_int(1), ContextMismatch);
    EXPECT_THROW((void)(F101.from_int(1) == f5.from_int(1)), ContextMismatch);
}

TEST(PrimeField, ModulusValidation) {
    EXPECT_THROW(PrimeFieldContext::make(100), ContextMismatch);
    EXPECT_THROW(PrimeFieldContext::make(1), ContextMismatch);
    EXPECT_NO_THROW(PrimeFieldContext::make(2));
    EXPECT_NO_THROW(PrimeFieldContext::make(4294967291ULL));
    EXPECT_THROW(PrimeFieldContext::make(4294967311ULL), ContextMismatch);
}

TEST(PrimeField, LargeModulusMultiplicationDoesNotOverflow) {
    const auto big = PrimeFieldContext::make(4294967291ULL);
    const auto a = big.from_int(4294967290L);  // -1
    EXPECT_EQ(a * a, big.one());
    EXPECT_EQ(a * a.inv(), big.one());
}

TEST(PrimeField, OrderingIsAnError) {
    EXPECT_THROW(compare(F101.from_int(1), F101.from_int(2)), OrderingError);
}

// Field axioms on seeded random samples, both rings.
template <typename S>
void check_axioms(typename S::context_type ctx, std::uint64_t seed) {
    auto rng = random::engine_for(seed);
    for (int t = 0; t < 500; ++t) {
        const S a = random::random_scalar<S>(rng, ctx);
        const S b = random::random_scalar<S>(rng, ctx);
        const S c = random::random_scalar<S>(rng, ctx);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, ctx.zero());
        ASSERT_EQ(a + (-a), ctx.zero());
        if (a.is_invertible()) {
            ASSERT_EQ(a * a.inv(), ctx.one());
        } else {
            ASSERT_THROW(a.inv(), NotInvertible);
        }
        // round trip through the text form
        ASSERT_EQ(ctx.parse(a.str()), a);
    }
}

TEST(RingProperties, RationalAxioms) { check_axioms<Rational>({}, 1); }
TEST(RingProperties, PrimeFieldAxioms) { check_axioms<ModP>(F101, 2); }

TEST(RingProperties, CanonicalFormIgnoresCommonFactor) {
    auto rng = random::engine_for(3);
    for (int t = 0; t < 200; ++t) {
        const long n = random::uniform_int(rng, -50, 50);
        const long d = random::uniform_int(rng, 1, 50);
        long k = random::uniform_int(rng, -20, 20);
        if (k == 0) k = 7;
        ASSERT_EQ(Rational(k * n, k * d), Rational(n, d));
        ASSERT_EQ(Rational(k * n, k * d).str(), Rational(n, d).str());
    }
}
