#pragma once

// Test-only reference computations. None of these call into the library's
// formula code; they rely only on Integer/Rational arithmetic.

#include <functional>
#include <random>
#include <vector>

#include "bernstir/exact.hpp"

namespace oracle {

using bernstir::Integer;
using bernstir::Rational;

inline Integer iterated_factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Rows 0..max_n of Pascal's triangle.
inline std::vector<std::vector<Integer>> pascal(int max_n) {
    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(1));
        for (int k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Calls visit(block_sizes) once per set partition of {0..n-1}, enumerated
/// as restricted growth strings.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::vector<int> sizes;
    std::function<void(int, int)> rec = [&](int pos, int blocks) {
        if (pos == n) {
            visit(sizes);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            if (b == blocks) sizes.push_back(0);
            ++sizes[b];
            label[pos] = b;
            rec(pos + 1, b == blocks ? blocks + 1 : blocks);
            --sizes[b];
            if (b == blocks) sizes.pop_back();
        }
    };
    rec(0, 0);
}

/// Partitions of an n-set into k blocks, each of size >= min_block.
inline Integer count_set_partitions(int n, int k, int min_block = 1) {
    Integer count = 0;
    for_each_set_partition(n, [&](const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) != k) return;
        for (int s : sizes) {
            if (s < min_block) return;
        }
        ++count;
    });
    return count;
}

/// B_{n,k}(x) as the sum over set partitions into k blocks of prod x_{|block|}.
inline Rational bell_by_set_partitions(int n, int k, const std::vector<Rational>& xs) {
    Rational total;
    for_each_set_partition(n, [&](const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) != k) return;
        Rational term(1);
        for (int s : sizes) term *= xs.at(static_cast<std::size_t>(s - 1));
        total += term;
    });
    return total;
}

/// B_0..B_max from sum_{j=0..m} C(m+1, j) B_j = 0, B_0 = 1.
inline std::vector<Rational> bernoulli_by_recurrence(int max_n) {
    const auto binom = pascal(max_n + 1);
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= max_n; ++m) {
        Rational sum;
        for (int j = 0; j < m; ++j) sum += Rational(binom[m + 1][j]) * b[j];
        b.push_back(-sum / Rational(m + 1));
    }
    return b;
}

/// Numerator in [-9, 9], denominator in [1, 9].
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace oracle
