/*
 * rational.hpp
 * ------------
 * Exact scalars: arbitrary-precision integers (Int) and rationals (Rational),
 * GMP-backed. Rational keeps the canonical form gcd(num, den) = 1, den > 0
 * at all times. Plus the small exact integer helpers the rest of the library
 * needs (isqrt, perfect squares, binomials, factorials).
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

#include "buchiff/errors.hpp"

namespace buchiff {

using Int = boost::multiprecision::mpz_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                        // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}                       // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = boost::multiprecision::mpq_rational(num, den); // canonicalizes
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Int num() const { return Int(boost::multiprecision::numerator(v_)); }
    Int den() const { return Int(boost::multiprecision::denominator(v_)); }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(1 / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // floor(num/den) as an integer, exact
    Int floor() const {
        Int n = num(), d = den(), q = n / d;
        if (n < 0 && q * d != n) --q;
        return q;
    }

    // canonical text form: "a/b" when b != 1, else "a"
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

    static constexpr int characteristic() { return 0; }

private:
    explicit Rational(boost::multiprecision::mpq_rational v) : v_(std::move(v)) {}
    boost::multiprecision::mpq_rational v_;
};

/* ---- exact integer helpers ---- */

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return Int(0);
    return boost::multiprecision::lcm(a, b);
}

// floor square root; input must be non-negative
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// exact binomial coefficient, multiplicative form
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at each step: r is C(n-k+i, i)
    }
    return r;
}

} // namespace buchiff
