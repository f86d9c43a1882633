#pragma once

// Exact scalar rings: arbitrary-precision rationals and prime fields.
//
// Every algorithm in this library is a template over a scalar type satisfying
// the `Ring` concept below. A scalar knows its context (the empty rational
// context, or the modulus of a prime field) so generic code can manufacture
// zeros and ones without a separate argument.

#include <cstdint>
#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include <gmpxx.h>

#include "cauchysum/errors.hpp"

namespace cauchysum {

class Rational;
class ModP;

struct RationalContext {
    Rational zero() const;
    Rational one() const;
    Rational from_int(long v) const;
    Rational parse(std::string_view text) const;
    bool operator==(const RationalContext&) const = default;
    std::string name() const { return "rational"; }
};

class Rational {
public:
    using context_type = RationalContext;

    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw NotInvertible("0");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "a" or "a/b" with optional leading sign; whitespace is not allowed.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        const auto num_txt = text.substr(0, slash);
        if (!valid_integer(num_txt)) throw ParseError("invalid rational: '" + std::string(text) + "'");
        mpz_class num = to_mpz(num_txt);
        mpz_class den(1);
        if (slash != std::string_view::npos) {
            const auto den_txt = text.substr(slash + 1);
            if (!valid_integer(den_txt)) throw ParseError("invalid rational: '" + std::string(text) + "'");
            den = to_mpz(den_txt);
            if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    context_type context() const { return {}; }
    const mpq_class& value() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    double to_double() const { return q_.get_d(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_invertible() const { return !is_zero(); }

    Rational inv() const {
        if (is_zero()) throw NotInvertible(str());
        return Rational(mpq_class(1) / q_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    static bool valid_integer(std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    }

    // GMP rejects an explicit '+'
    static mpz_class to_mpz(std::string_view s) {
        if (s.front() == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    }

    mpq_class q_;
};

inline Rational RationalContext::zero() const { return Rational(0); }
inline Rational RationalContext::one() const { return Rational(1); }
inline Rational RationalContext::from_int(long v) const { return Rational(v); }
inline Rational RationalContext::parse(std::string_view text) const { return Rational::parse(text); }

inline bool is_probable_modulus(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct PrimeFieldContext {
    std::uint64_t p = 101;

    static PrimeFieldContext make(std::uint64_t p) {
        if (p >= (std::uint64_t{1} << 32)) throw ContextMismatch("prime modulus must be < 2^32, got " + std::to_string(p));
        if (!is_probable_modulus(p)) throw ContextMismatch("modulus " + std::to_string(p) + " is not prime");
        return PrimeFieldContext{p};
    }

    ModP zero() const;
    ModP one() const;
    ModP from_int(long v) const;
    ModP parse(std::string_view text) const;
    bool operator==(const PrimeFieldContext&) const = default;
    std::string name() const { return "prime:" + std::to_string(p); }
};

/// Residue modulo a prime p fixed by its context. Operations between residues
/// of different moduli throw ContextMismatch.
class ModP {
public:
    using context_type = PrimeFieldContext;

    ModP(std::int64_t v, PrimeFieldContext ctx) : p_(ctx.p) {
        const auto m = static_cast<std::int64_t>(p_);
        auto r = v % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    context_type context() const { return PrimeFieldContext{p_}; }
    std::string str() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_invertible() const { return v_ != 0; }

    ModP inv() const {
        if (v_ == 0) throw NotInvertible(str() + " (mod " + std::to_string(p_) + ")");
        // extended Euclid on (v, p)
        std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(v_);
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            const auto q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        return ModP(t0, context());
    }

    friend ModP operator+(const ModP& a, const ModP& b) {
        check(a, b);
        return raw((a.v_ + b.v_) % a.p_, a.p_);
    }
    friend ModP operator-(const ModP& a, const ModP& b) {
        check(a, b);
        return raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
    }
    friend ModP operator*(const ModP& a, const ModP& b) {
        check(a, b);
        return raw((a.v_ * b.v_) % a.p_, a.p_);
    }
    friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inv(); }
    ModP operator-() const { return raw((p_ - v_) % p_, p_); }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }
    ModP& operator/=(const ModP& o) { return *this = *this / o; }

    friend bool operator==(const ModP& a, const ModP& b) {
        check(a, b);
        return a.v_ == b.v_;
    }

private:
    static ModP raw(std::uint64_t v, std::uint64_t p) {
        ModP r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static void check(const ModP& a, const ModP& b) {
        if (a.p_ != b.p_)
            throw ContextMismatch("mixing residues mod " + std::to_string(a.p_) + " and mod " + std::to_string(b.p_));
    }
    ModP() = default;

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 101;
};

inline ModP PrimeFieldContext::zero() const { return ModP(0, *this); }
inline ModP PrimeFieldContext::one() const { return ModP(1, *this); }
inline ModP PrimeFieldContext::from_int(long v) const { return ModP(v, *this); }

inline ModP PrimeFieldContext::parse(std::string_view text) const {
    // Parse through Rational so "a/b" means a * b^-1; integers are reduced mod p.
    const Rational q = Rational::parse(text);
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class n = q.num() % pz;
    mpz_class d = q.den() % pz;
    if (d == 0) throw ParseError("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p));
    return ModP(n.get_si(), *this) / ModP(d.get_si(), *this);
}

template <typename S>
concept Ring = requires(const S& a, const S& b, const typename S::context_type& ctx) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inv() } -> std::same_as<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_invertible() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    { a.context() } -> std::same_as<typename S::context_type>;
    { ctx.zero() } -> std::same_as<S>;
    { ctx.one() } -> std::same_as<S>;
    { ctx.from_int(1L) } -> std::same_as<S>;
};

static_assert(Ring<Rational>);
static_assert(Ring<ModP>);

template <Ring S>
bool is_invertible(const S& a) { return a.is_invertible(); }

template <Ring S>
S inv(const S& a) { return a.inv(); }

inline std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

[[noreturn]] inline std::strong_ordering compare(const ModP& a, const ModP&) {
    throw OrderingError("ordering requested in prime field F_" + std::to_string(a.modulus()));
}

inline std::string render(const Rational& a) { return a.str(); }
inline std::string render(const ModP& a) { return a.str(); }

}  // namespace cauchysum
