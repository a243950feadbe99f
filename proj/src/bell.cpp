#include "bernstir/bell.hpp"

#include <string>

namespace bernstir {

BellArgs BellArgs::parse(std::string_view csv) {
    std::vector<Rational> xs;
    if (csv.empty()) return BellArgs(std::move(xs));
    std::size_t start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        xs.push_back(Rational::parse(csv.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return BellArgs(std::move(xs));
}

BellArgs BellArgs::constant(std::size_t count, const Rational& value) {
    return BellArgs(std::vector<Rational>(count, value));
}

BellArgs BellArgs::reciprocal(std::size_t count) {
    std::vector<Rational> xs;
    xs.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) xs.emplace_back(Integer(1), Integer(static_cast<unsigned long>(i + 1)));
    return BellArgs(std::move(xs));
}

BellArgs BellArgs::zero_one(std::size_t count) {
    std::vector<Rational> xs(count, Rational(1));
    if (count > 0) xs[0] = 0;
    return BellArgs(std::move(xs));
}

void BellArgs::require(int n, int k) const {
    if (k < 1 || k > n) {
        throw ArgumentError("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) +
                            "} needs n >= k >= 1");
    }
    const auto needed = static_cast<std::size_t>(n - k + 1);
    if (xs_.size() < needed) {
        throw ArgumentError("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                            std::to_string(needed) + " arguments, got " + std::to_string(xs_.size()));
    }
}

std::string BellArgs::str() const {
    std::string out;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i) out += ',';
        out += xs_[i].str();
    }
    return out;
}

namespace {

// Depth-first enumeration of block-size profiles, largest block size first.
class ProfileSum {
public:
    ProfileSum(int n, const BellArgs& args, int max_size)
        : args_(args), n_fact_(factorial(n)), counts_(static_cast<std::size_t>(max_size) + 1, 0) {
        size_fact_.reserve(counts_.size());
        for (int i = 0; i <= max_size; ++i) size_fact_.push_back(factorial(i));
    }

    Rational run(int n, int k, int max_size) {
        visit(max_size, n, k);
        return total_;
    }

private:
    void visit(int size, int rem_n, int rem_k) {
        if (size == 1) {
            if (rem_n != rem_k) return;
            counts_[1] = rem_n;
            accumulate();
            counts_[1] = 0;
            return;
        }
        // Blocks of size <= `size` must still fit: rem_k <= rem_n <= size * rem_k
        // before and after placing blocks of this size.
        for (int c = 0; c <= rem_k && c * size <= rem_n; ++c) {
            const int n_left = rem_n - c * size;
            const int k_left = rem_k - c;
            if (k_left > n_left || n_left > (size - 1) * k_left) continue;
            counts_[static_cast<std::size_t>(size)] = c;
            visit(size - 1, n_left, k_left);
        }
        counts_[static_cast<std::size_t>(size)] = 0;
    }

    void accumulate() {
        Integer denom = 1;
        for (std::size_t i = 1; i < counts_.size(); ++i) {
            const int l = counts_[i];
            if (l == 0) continue;
            denom *= factorial(l) * power(size_fact_[i], static_cast<unsigned long>(l));
        }
        Integer coefficient;
        mpz_divexact(coefficient.get_mpz_t(), n_fact_.get_mpz_t(), denom.get_mpz_t());

        Rational term(coefficient);
        for (std::size_t i = 1; i < counts_.size(); ++i) {
            const int l = counts_[i];
            if (l == 0) continue;
            term *= pow(args_(static_cast<int>(i)), static_cast<unsigned long>(l));
        }
        total_ += term;
    }

    const BellArgs& args_;
    Integer n_fact_;
    std::vector<Integer> size_fact_;
    std::vector<int> counts_;
    Rational total_;
};

}  // namespace

Rational bell_partition_sum(int n, int k, const BellArgs& args) {
    args.require(n, k);
    const int max_size = n - k + 1;
    return ProfileSum(n, args, max_size).run(n, k, max_size);
}

Rational bell_recurrence(int n, int k, const BellArgs& args) {
    args.require(n, k);
    const int gap = n - k;
    // value[j][c] = B_{j,c}, only for j - c <= gap (the rest never feeds B_{n,k}).
    std::vector<std::vector<Rational>> value(static_cast<std::size_t>(n) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(k) + 1));
    value[0][0] = 1;
    for (int c = 1; c <= k; ++c) {
        for (int j = c; j <= c + gap; ++j) {
            Rational sum;
            for (int i = 1; i <= j - c + 1; ++i) {
                const Rational& below = value[static_cast<std::size_t>(j - i)][static_cast<std::size_t>(c - 1)];
                if (below.is_zero()) continue;
                sum += Rational(binomial(j - 1, i - 1)) * args(i) * below;
            }
            value[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = std::move(sum);
        }
    }
    return value[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer bell_zero_one(int n, int k, const StirlingTable& table) {
    if (k < 1 || k > n) throw ArgumentError("bell_zero_one: needs n >= k >= 1");
    table.require(n, "bell_zero_one");
    Integer sum = 0;
    for (int i = 0; i <= k; ++i) {
        Integer term = binomial(n, i) * table.at(n - i, k - i);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational bell_reciprocal_args(int n, int k, const StirlingTable& table) {
    if (k < 1 || k > n) throw ArgumentError("bell_reciprocal_args: needs n >= k >= 1");
    table.require(n + k, "bell_reciprocal_args");
    Integer sum = 0;
    for (int i = 0; i <= k; ++i) {
        Integer term = binomial(n + k, k - i) * table.at(n + i, i);
        if ((k - i) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return Rational(factorial(n) * sum, factorial(n + k));
}

ScalingSides bell_scaling_identity(int n, int k, std::span<const Rational> from_x2) {
    if (k < 1 || k > n) throw ArgumentError("bell_scaling_identity: needs n >= k >= 1");
    if (from_x2.size() < static_cast<std::size_t>(n)) {
        throw ArgumentError("bell_scaling_identity: needs x_2..x_" + std::to_string(n + 1) + " (" +
                            std::to_string(n) + " values), got " + std::to_string(from_x2.size()));
    }

    std::vector<Rational> scaled;
    for (int j = 1; j <= n - k + 1; ++j) {
        scaled.push_back(from_x2[static_cast<std::size_t>(j - 1)] / Rational(j + 1));
    }
    std::vector<Rational> shifted{Rational(0)};
    shifted.insert(shifted.end(), from_x2.begin(), from_x2.begin() + n);

    ScalingSides sides;
    sides.lhs = bell_partition_sum(n, k, BellArgs(std::move(scaled)));
    sides.rhs = Rational(factorial(n), factorial(n + k)) * bell_partition_sum(n + k, k, BellArgs(std::move(shifted)));
    return sides;
}

}  // namespace bernstir
