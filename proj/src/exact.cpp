#include "bernstir/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace bernstir {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer factorial(int n) {
    if (n < 0) {
        throw ArgumentError("factorial: n must be nonnegative, got " + std::to_string(n));
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, long k) {
    if (n < 0) {
        throw ArgumentError("binomial: n must be nonnegative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer power(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw ArgumentError("inverse of zero");
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw ArgumentError("division by zero");
    q_ /= rhs.q_;
    return *this;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) {
        throw ArgumentError("malformed integer '" + std::string(text) + "'");
    }
    Integer r(std::string(digits), 10);
    return text.front() == '-' ? Integer(-r) : r;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ArgumentError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

Rational pow(const Rational& r, unsigned long exp) {
    return Rational(power(r.numerator(), exp), power(r.denominator(), exp));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bernstir
