#pragma once

// Bernoulli numbers by several independent formulas. B_1 = -1/2 throughout.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernstir/exact.hpp"
#include "bernstir/stirling.hpp"

namespace bernstir {

enum class MethodId {
    SeriesOracle,          // "oracle": reciprocal of (e^t - 1)/t
    TheoremMain,           // "theorem": single Stirling sum over S(n+i, i)
    BellSum,               // "bell": Bell polynomials at 1/2, 1/3, ...
    Logan,                 // "logan": sum (-1)^k k!/(k+1) S(n,k)
    GuoQiRecursion,        // "guo-qi": power-sum coefficient recursion, even n
    DoubleStirling,        // "double-stirling": products of Stirling numbers, even n
    AlternatingDoubleSum,  // "alternating": alternating double power sum, even n
};

inline constexpr std::array<MethodId, 7> kAllMethods = {
    MethodId::SeriesOracle, MethodId::TheoremMain,    MethodId::BellSum,
    MethodId::Logan,        MethodId::GuoQiRecursion, MethodId::DoubleStirling,
    MethodId::AlternatingDoubleSum,
};

std::string_view method_name(MethodId method);
std::optional<MethodId> parse_method(std::string_view name);

/// Whether `method` is defined at index n.
bool supports(MethodId method, int n);
/// Human-readable domain, e.g. "even n >= 2".
std::string_view supported_range(MethodId method);
/// Methods that support n, in kAllMethods order.
std::vector<MethodId> methods_supporting(int n);

/// Raised by the dispatcher when a method is undefined at an index
/// (distinct from a method that returns zero).
class UnsupportedIndex : public std::domain_error {
public:
    UnsupportedIndex(MethodId method, int n);
    MethodId method() const { return method_; }
    int index() const { return n_; }

private:
    MethodId method_;
    int n_;
};

/// Coefficients A_0..A_{p+1} with sum_{m=1..n} m^p = sum_m A_m n^m.
struct PowerSumCoeffs {
    int exponent = 0;
    std::vector<Rational> coeffs;

    Rational evaluate(const Rational& n) const;
};

/// Solves the Vandermonde system given by both sides at n = 0..p+1, so
/// no Bernoulli numbers are involved.
PowerSumCoeffs power_sum_coeffs(int p);

/// sum_{i=0..n} (-1)^i C(n+1, i+1)/C(n+i, i) S(n+i, i); table must reach 2n.
Rational bernoulli_theorem(int n, const StirlingTable& table);

/// sum_{k=1..n} (-1)^k k! B_{n,k}(1/2, ..., 1/(n-k+2)) for n >= 1, with the
/// Bell values taken from bell_reciprocal_args. Table must reach 2n.
Rational bernoulli_bell(int n, const StirlingTable& table);
Rational bernoulli_bell(int n);

/// sum_{k=1..n} (-1)^k k!/(k+1) S(n,k) for n >= 1.
Rational bernoulli_logan(int n, const StirlingTable& table);

/// B_{2k} = 1/2 - 1/(2k+1) - 2k sum_{i=1..k-1} A_{2(k-i)}/(2(k-i)+1), with A
/// the power-sum coefficients for exponent 2k-1.
Rational bernoulli_guo_qi(int k);

/// B_{2k} from two sums of products of Stirling numbers; table must reach 2k+1.
Rational bernoulli_double_stirling(int k, const StirlingTable& table);

/// The alternating double sum
///   (-1)^(k-1) k / (4^(k-1) (4^k - 1)) * alternating_inner_sum(k)
/// exactly as published. It does NOT reproduce B_{2k} (k = 1 gives 1/3);
/// cross_verify reports the disagreement.
Rational bernoulli_alternating(int k);

/// sum_{i=0..k-1} sum_{l=0..k-i-1} (-1)^(i+l) C(2k, l) (k-i-l)^(2k-1).
Integer alternating_inner_sum(int k);

/// Rows of the Stirling table a method needs at index n; -1 for none.
int stirling_rows_needed(MethodId method, int n);

/// Stand-alone dispatcher: builds whatever table the method needs.
/// Throws UnsupportedIndex outside the method's domain.
Rational bernoulli(int n, MethodId method);

/// Shares one Stirling table and one oracle expansion across many calls.
/// Immutable after construction, so compute() may run concurrently.
class BernoulliEngine {
public:
    explicit BernoulliEngine(int max_n);

    int max_n() const { return max_n_; }
    const StirlingTable& table() const { return table_; }
    const std::vector<Rational>& oracle() const { return oracle_; }

    Rational compute(int n, MethodId method) const;

private:
    int max_n_;
    StirlingTable table_;
    std::vector<Rational> oracle_;
};

}  // namespace bernstir
