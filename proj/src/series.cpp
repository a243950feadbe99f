#include "bernstir/series.hpp"

#include <string>

namespace bernstir {

namespace {

void check_orders(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw ArgumentError(std::string(op) + ": series orders differ (" + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
    }
}

void check_indices(int n, int k, const char* who) {
    if (k < 0 || n < k) throw ArgumentError(std::string(who) + ": needs 0 <= k <= n");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw ArgumentError("TruncatedSeries: order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("TruncatedSeries: needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::exp(int order) {
    TruncatedSeries s(order);
    Integer fact = 1;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) fact *= j;
        s[j] = Rational(Integer(1), fact);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_orders(*this, rhs, "series add");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_orders(*this, rhs, "series subtract");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b, "series_mul");
    const int order = a.order();
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a[0].is_zero()) throw NotInvertible("series_reciprocal: constant term is zero");
    const int order = a.order();
    const Rational inv0 = a[0].inverse();
    TruncatedSeries b(order);
    b[0] = inv0;
    for (int j = 1; j <= order; ++j) {
        Rational sum;
        for (int i = 1; i <= j; ++i) {
            if (a[i].is_zero()) continue;
            sum += a[i] * b[j - i];
        }
        b[j] = -(inv0 * sum);
    }
    return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, int k) {
    if (k < 0) throw ArgumentError("series_pow: exponent must be nonnegative");
    TruncatedSeries out = TruncatedSeries::one(a.order());
    for (int i = 0; i < k; ++i) out = series_mul(out, a);
    return out;
}

std::vector<Rational> bernoulli_series(int max_n) {
    if (max_n < 0) throw ArgumentError("bernoulli_series: order must be nonnegative");
    // (e^t - 1)/t = sum_j t^j/(j+1)!
    TruncatedSeries g(max_n);
    Integer fact = 1;
    for (int j = 0; j <= max_n; ++j) {
        fact *= j + 1;
        g[j] = Rational(Integer(1), fact);
    }
    const TruncatedSeries inv = series_reciprocal(g);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    Integer jfact = 1;
    for (int j = 0; j <= max_n; ++j) {
        if (j > 0) jfact *= j;
        out.push_back(inv[j] * Rational(jfact));
    }
    return out;
}

Rational stirling_egf_coeff(int n, int k) {
    check_indices(n, k, "stirling_egf_coeff");
    TruncatedSeries base = TruncatedSeries::exp(n);
    base[0] = 0;
    const TruncatedSeries p = series_pow(base, k);
    return p[n] * Rational(factorial(n), factorial(k));
}

Rational bell_egf_coeff(int n, int k, const BellArgs& args) {
    check_indices(n, k, "bell_egf_coeff");
    if (k == 0) return n == 0 ? 1 : 0;
    args.require(n, k);
    TruncatedSeries base(n);
    for (int m = 1; m <= n - k + 1; ++m) base[m] = args(m) * Rational(Integer(1), factorial(m));
    const TruncatedSeries p = series_pow(base, k);
    return p[n] * Rational(factorial(n), factorial(k));
}

}  // namespace bernstir
