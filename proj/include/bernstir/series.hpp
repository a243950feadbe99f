#pragma once

// Truncated formal power series over exact rationals.
//
// A TruncatedSeries of order N holds c_0..c_N and stands for
// sum c_j t^j mod t^(N+1). Arithmetic between series of different orders
// is rejected instead of truncating silently.

#include <span>
#include <stdexcept>
#include <vector>

#include "bernstir/bell.hpp"
#include "bernstir/exact.hpp"

namespace bernstir {

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order);
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries one(int order);
    /// sum_j t^j / j!
    static TruncatedSeries exp(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    const Rational& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    Rational& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order; ArgumentError on mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// b with a*b = 1 mod t^(N+1); NotInvertible when c_0 = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// a^k by repeated multiplication; a^0 is one().
TruncatedSeries series_pow(const TruncatedSeries& a, int k);

/// B_0..B_N from x/(e^x - 1) = 1 / sum_j x^j/(j+1)!.
std::vector<Rational> bernoulli_series(int max_n);

/// n! [t^n] (e^t - 1)^k / k!, for 0 <= k <= n.
Rational stirling_egf_coeff(int n, int k);

/// n! [t^n] (1/k!) (sum_{m>=1} x_m t^m/m!)^k, for 0 <= k <= n. Only
/// x_1..x_{n-k+1} can reach t^n, so only those are read.
Rational bell_egf_coeff(int n, int k, const BellArgs& args);

}  // namespace bernstir
