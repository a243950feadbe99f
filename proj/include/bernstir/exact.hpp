#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// canonical form at all times (reduced, denominator > 0), so operator==
// is mathematical equality.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bernstir {

using Integer = mpz_class;

/// Thrown for invalid inputs: bad indices, short argument lists, tables
/// that do not cover a request, zero denominators, malformed tokens.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// n! for n >= 0.
Integer factorial(int n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(int n, long k);

/// base^exp.
Integer power(const Integer& base, unsigned long exp);

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    /// num/den reduced; throws ArgumentError when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q", "-p/q" (q may be "1"); no whitespace.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Throws ArgumentError for zero.
    Rational inverse() const;

    /// "p/q", or "p" when the value is an integer.
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

/// Canonical rational num/den; throws ArgumentError when den == 0.
inline Rational rat(const Integer& num, const Integer& den) { return Rational(num, den); }

/// r^exp; pow(0, 0) is 1.
Rational pow(const Rational& r, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a plain (optionally signed) decimal integer; throws ArgumentError.
Integer parse_integer(std::string_view text);

}  // namespace bernstir
