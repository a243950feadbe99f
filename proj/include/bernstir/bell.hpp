#pragma once

// Partial (second-kind) Bell polynomials B_{n,k}(x_1, ..., x_{n-k+1})
// evaluated at exact rational arguments.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bernstir/exact.hpp"
#include "bernstir/stirling.hpp"

namespace bernstir {

/// Argument list x_1, x_2, ... for a Bell polynomial. Indexing through
/// operator() is 1-based to match the polynomial's variables.
class BellArgs {
public:
    BellArgs() = default;
    explicit BellArgs(std::vector<Rational> xs) : xs_(std::move(xs)) {}

    /// Comma-separated "p/q" tokens, e.g. "1/2,1/3,-4".
    static BellArgs parse(std::string_view csv);
    /// count copies of value.
    static BellArgs constant(std::size_t count, const Rational& value);
    /// x_i = 1/(i+1) for i = 1..count.
    static BellArgs reciprocal(std::size_t count);
    /// x_1 = 0, x_i = 1 for i = 2..count.
    static BellArgs zero_one(std::size_t count);

    std::size_t size() const { return xs_.size(); }
    const Rational& operator()(int i) const { return xs_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const Rational> values() const { return xs_; }

    /// Validates n >= k >= 1 and that x_1..x_{n-k+1} are present.
    void require(int n, int k) const;

    std::string str() const;

private:
    std::vector<Rational> xs_;
};

/// Defining sum over block-size profiles (l_1, l_2, ...) with
/// sum i*l_i = n and sum l_i = k; each profile contributes
/// n! / prod(l_i! (i!)^l_i) * prod x_i^l_i.
Rational bell_partition_sum(int n, int k, const BellArgs& args);

/// Convolution over the block holding the first element:
/// B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}.
Rational bell_recurrence(int n, int k, const BellArgs& args);

/// B_{n,k}(0, 1, ..., 1) = sum_{i=0..k} (-1)^i C(n,i) S(n-i, k-i): the number
/// of partitions of an n-set into k blocks of size at least 2.
Integer bell_zero_one(int n, int k, const StirlingTable& table);

/// B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))
///   = n!/(n+k)! sum_{i=0..k} (-1)^(k-i) C(n+k, k-i) S(n+i, i).
/// The table must reach row n+k.
Rational bell_reciprocal_args(int n, int k, const StirlingTable& table);

struct ScalingSides {
    Rational lhs;
    Rational rhs;
};

/// Both sides of
///   B_{n,k}(x_2/2, x_3/3, ..., x_{n-k+2}/(n-k+2)) = n!/(n+k)! B_{n+k,k}(0, x_2, ..., x_{n+1}).
/// `from_x2[j]` holds x_{j+2}; at least n values are required.
ScalingSides bell_scaling_identity(int n, int k, std::span<const Rational> from_x2);

}  // namespace bernstir
