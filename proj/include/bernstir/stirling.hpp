#pragma once

// Stirling numbers of the second kind.
//
// Conventions: S(0,0) = 1, S(n,0) = 0 for n >= 1, S(n,k) = 0 for k > n.
// The k = 0 column is needed by the Bernoulli formula that evaluates
// S(n+i, i) starting at i = 0.

#include <string_view>
#include <vector>

#include "bernstir/exact.hpp"

namespace bernstir {

/// S(n,k) = (1/k!) sum_{l=1..k} (-1)^(k-l) C(k,l) l^n.
/// Throws std::logic_error if the alternating sum is not a multiple of k!.
Integer stirling_explicit(int n, int k);

/// Immutable triangle of S(n,k) for 0 <= k <= n <= max_n.
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return max_n_; }
    bool covers(int n) const { return n >= 0 && n <= max_n_; }

    /// Throws ArgumentError when n is outside [0, max_n]. Returns zero for
    /// k < 0 or k > n.
    const Integer& at(int n, int k) const;

    /// Throws ArgumentError naming `who` unless the table reaches row n.
    void require(int n, std::string_view who) const;

private:
    static std::size_t offset(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

    int max_n_;
    std::vector<Integer> values_;
};

/// Builds the table with S(n,k) = k S(n-1,k) + S(n-1,k-1).
StirlingTable stirling_recurrence_table(int max_n);

}  // namespace bernstir
