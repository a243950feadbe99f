#include "bernstir/stirling.hpp"

#include <string>

namespace bernstir {

Integer stirling_explicit(int n, int k) {
    if (n < 0 || k < 0) {
        throw ArgumentError("stirling_explicit: indices must be nonnegative");
    }
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;

    Integer sum = 0;
    for (int l = 1; l <= k; ++l) {
        Integer term = binomial(k, l) * power(Integer(l), static_cast<unsigned long>(n));
        if ((k - l) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const Integer kfact = factorial(k);
    if (!mpz_divisible_p(sum.get_mpz_t(), kfact.get_mpz_t())) {
        throw std::logic_error("stirling_explicit: alternating sum for S(" + std::to_string(n) + "," +
                               std::to_string(k) + ") not divisible by k!");
    }
    Integer result;
    mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), kfact.get_mpz_t());
    return result;
}

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw ArgumentError("StirlingTable: max_n must be nonnegative");
    values_.resize(offset(max_n + 1));
    values_[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        const std::size_t row = offset(n);
        const std::size_t prev = offset(n - 1);
        values_[row] = 0;
        for (int k = 1; k < n; ++k) {
            values_[row + k] = k * values_[prev + k] + values_[prev + k - 1];
        }
        values_[row + n] = 1;
    }
}

const Integer& StirlingTable::at(int n, int k) const {
    static const Integer zero = 0;
    if (!covers(n)) {
        throw ArgumentError("StirlingTable: row " + std::to_string(n) + " outside table of max_n " +
                            std::to_string(max_n_));
    }
    if (k < 0 || k > n) return zero;
    return values_[offset(n) + k];
}

void StirlingTable::require(int n, std::string_view who) const {
    if (!covers(n)) {
        throw ArgumentError(std::string(who) + ": Stirling table covers n <= " + std::to_string(max_n_) +
                            " but row " + std::to_string(n) + " is needed");
    }
}

StirlingTable stirling_recurrence_table(int max_n) { return StirlingTable(max_n); }

}  // namespace bernstir
