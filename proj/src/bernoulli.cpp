#include "bernstir/bernoulli.hpp"

#include "bernstir/bell.hpp"
#include "bernstir/series.hpp"

namespace bernstir {

namespace {

void require_positive(int k, const char* who) {
    if (k < 1) throw ArgumentError(std::string(who) + ": index must be >= 1, got " + std::to_string(k));
}

bool is_even_only(MethodId method) {
    return method == MethodId::GuoQiRecursion || method == MethodId::DoubleStirling ||
           method == MethodId::AlternatingDoubleSum;
}

std::string describe_unsupported(MethodId method, int n) {
    std::string msg = "method '" + std::string(method_name(method)) + "' supports only " +
                      std::string(supported_range(method)) + " (got n = " + std::to_string(n) + ")";
    const auto ok = methods_supporting(n);
    msg += "; methods supporting n = " + std::to_string(n) + ":";
    for (std::size_t i = 0; i < ok.size(); ++i) {
        msg += (i ? ", " : " ");
        msg += method_name(ok[i]);
    }
    if (ok.empty()) msg += " none";
    return msg;
}

}  // namespace

std::string_view method_name(MethodId method) {
    switch (method) {
        case MethodId::SeriesOracle: return "oracle";
        case MethodId::TheoremMain: return "theorem";
        case MethodId::BellSum: return "bell";
        case MethodId::Logan: return "logan";
        case MethodId::GuoQiRecursion: return "guo-qi";
        case MethodId::DoubleStirling: return "double-stirling";
        case MethodId::AlternatingDoubleSum: return "alternating";
    }
    return "unknown";
}

std::optional<MethodId> parse_method(std::string_view name) {
    for (MethodId m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

bool supports(MethodId method, int n) {
    if (n < 0) return false;
    if (is_even_only(method)) return n >= 2 && n % 2 == 0;
    if (method == MethodId::BellSum || method == MethodId::Logan) return n >= 1;
    return true;
}

std::string_view supported_range(MethodId method) {
    if (is_even_only(method)) return "even n >= 2";
    if (method == MethodId::BellSum || method == MethodId::Logan) return "n >= 1";
    return "n >= 0";
}

std::vector<MethodId> methods_supporting(int n) {
    std::vector<MethodId> out;
    for (MethodId m : kAllMethods) {
        if (supports(m, n)) out.push_back(m);
    }
    return out;
}

UnsupportedIndex::UnsupportedIndex(MethodId method, int n)
    : std::domain_error(describe_unsupported(method, n)), method_(method), n_(n) {}

Rational PowerSumCoeffs::evaluate(const Rational& n) const {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

PowerSumCoeffs power_sum_coeffs(int p) {
    if (p < 0) throw ArgumentError("power_sum_coeffs: exponent must be nonnegative");
    const int size = p + 2;  // unknowns A_0..A_{p+1}, nodes 0..p+1

    // Right-hand side: sum_{m=1..j} m^p at node j.
    std::vector<Rational> c(static_cast<std::size_t>(size));
    Integer running = 0;
    for (int j = 0; j < size; ++j) {
        if (j > 0) running += power(Integer(j), static_cast<unsigned long>(p));
        c[static_cast<std::size_t>(j)] = running;
    }

    // Vandermonde solve: Newton divided differences on the nodes...
    for (int level = 1; level < size; ++level) {
        for (int j = size - 1; j >= level; --j) {
            auto& cj = c[static_cast<std::size_t>(j)];
            cj = (cj - c[static_cast<std::size_t>(j - 1)]) / Rational(level);  // node gap x_j - x_{j-level}
        }
    }
    // ...then expand the Newton form into monomial coefficients.
    std::vector<Rational> poly{c.back()};
    for (int j = size - 2; j >= 0; --j) {
        // poly <- poly * (t - j) + c_j
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= poly[d] * Rational(j);
        }
        next[0] += c[static_cast<std::size_t>(j)];
        poly = std::move(next);
    }
    poly.resize(static_cast<std::size_t>(size));
    return PowerSumCoeffs{p, std::move(poly)};
}

Rational bernoulli_theorem(int n, const StirlingTable& table) {
    if (n < 0) throw ArgumentError("bernoulli_theorem: n must be nonnegative");
    table.require(2 * n, "bernoulli_theorem");
    Rational sum;
    for (int i = 0; i <= n; ++i) {
        Rational term(binomial(n + 1, i + 1) * table.at(n + i, i), binomial(n + i, i));
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational bernoulli_bell(int n, const StirlingTable& table) {
    require_positive(n, "bernoulli_bell");
    table.require(2 * n, "bernoulli_bell");
    Rational sum;
    for (int k = 1; k <= n; ++k) {
        Rational term = Rational(factorial(k)) * bell_reciprocal_args(n, k, table);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational bernoulli_bell(int n) {
    require_positive(n, "bernoulli_bell");
    return bernoulli_bell(n, StirlingTable(2 * n));
}

Rational bernoulli_logan(int n, const StirlingTable& table) {
    require_positive(n, "bernoulli_logan");
    table.require(n, "bernoulli_logan");
    Rational sum;
    for (int k = 1; k <= n; ++k) {
        Rational term(factorial(k) * table.at(n, k), Integer(k + 1));
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational bernoulli_guo_qi(int k) {
    require_positive(k, "bernoulli_guo_qi");
    // The exponent of the power sum is 2k-1; reading it as 2k does not
    // reproduce B_4.
    const PowerSumCoeffs a = power_sum_coeffs(2 * k - 1);
    Rational sum;
    for (int i = 1; i <= k - 1; ++i) {
        const int m = 2 * (k - i);
        sum += a.coeffs[static_cast<std::size_t>(m)] / Rational(m + 1);
    }
    return Rational(Integer(1), Integer(2)) - Rational(Integer(1), Integer(2 * k + 1)) - Rational(2 * k) * sum;
}

Rational bernoulli_double_stirling(int k, const StirlingTable& table) {
    require_positive(k, "bernoulli_double_stirling");
    const int n = 2 * k;
    table.require(n + 1, "bernoulli_double_stirling");
    Rational first;
    for (int m = 1; m <= n - 1; ++m) {
        first += Rational(table.at(n + 1, m + 1) * table.at(n, n - m), binomial(n, m));
    }
    Rational second;
    for (int m = 1; m <= n; ++m) {
        second += Rational(table.at(n, m) * table.at(n + 1, n - m + 1), binomial(n, m - 1));
    }
    return Rational(1) + first - Rational(Integer(n), Integer(n + 1)) * second;
}

Integer alternating_inner_sum(int k) {
    require_positive(k, "alternating_inner_sum");
    Integer sum = 0;
    for (int i = 0; i <= k - 1; ++i) {
        for (int l = 0; l <= k - i - 1; ++l) {
            Integer term = binomial(2 * k, l) * power(Integer(k - i - l), static_cast<unsigned long>(2 * k - 1));
            if ((i + l) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    return sum;
}

Rational bernoulli_alternating(int k) {
    require_positive(k, "bernoulli_alternating");
    const Integer four_pow_k = power(Integer(4), static_cast<unsigned long>(k));
    const Integer denom = power(Integer(4), static_cast<unsigned long>(k - 1)) * (four_pow_k - 1);
    Integer numer = Integer(k) * alternating_inner_sum(k);
    if ((k - 1) % 2 != 0) numer = -numer;
    return Rational(numer, denom);
}

int stirling_rows_needed(MethodId method, int n) {
    switch (method) {
        case MethodId::TheoremMain:
        case MethodId::BellSum: return 2 * n;
        case MethodId::Logan: return n;
        case MethodId::DoubleStirling: return n + 1;
        default: return -1;
    }
}

namespace {

Rational dispatch(int n, MethodId method, const StirlingTable* table, const std::vector<Rational>* oracle) {
    if (!supports(method, n)) throw UnsupportedIndex(method, n);
    switch (method) {
        case MethodId::SeriesOracle:
            if (oracle) return (*oracle)[static_cast<std::size_t>(n)];
            return bernoulli_series(n)[static_cast<std::size_t>(n)];
        case MethodId::TheoremMain: return bernoulli_theorem(n, *table);
        case MethodId::BellSum: return bernoulli_bell(n, *table);
        case MethodId::Logan: return bernoulli_logan(n, *table);
        case MethodId::GuoQiRecursion: return bernoulli_guo_qi(n / 2);
        case MethodId::DoubleStirling: return bernoulli_double_stirling(n / 2, *table);
        case MethodId::AlternatingDoubleSum: return bernoulli_alternating(n / 2);
    }
    throw std::logic_error("unhandled method");
}

}  // namespace

Rational bernoulli(int n, MethodId method) {
    if (!supports(method, n)) throw UnsupportedIndex(method, n);
    const int rows = stirling_rows_needed(method, n);
    if (rows < 0) return dispatch(n, method, nullptr, nullptr);
    const StirlingTable table(rows);
    return dispatch(n, method, &table, nullptr);
}

BernoulliEngine::BernoulliEngine(int max_n)
    : max_n_(max_n), table_(2 * std::max(max_n, 0) + 1), oracle_(bernoulli_series(std::max(max_n, 0))) {
    if (max_n < 0) throw ArgumentError("BernoulliEngine: max_n must be nonnegative");
}

Rational BernoulliEngine::compute(int n, MethodId method) const {
    if (n > max_n_) {
        throw ArgumentError("BernoulliEngine: n = " + std::to_string(n) + " exceeds max_n = " +
                            std::to_string(max_n_));
    }
    return dispatch(n, method, &table_, &oracle_);
}

}  // namespace bernstir
