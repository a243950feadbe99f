#pragma once

// Cross-verification of every Bernoulli method against the series oracle,
// and a randomized suite over the Bell / Stirling / series identities.
//
// Comparisons are exact. Disagreements are recorded as data; only the
// caller decides whether they are fatal.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bernstir/bernoulli.hpp"
#include "bernstir/exact.hpp"

namespace bernstir {

using MethodSet = std::set<MethodId>;

struct MethodKey {
    int n = 0;
    MethodId method = MethodId::SeriesOracle;

    friend bool operator==(const MethodKey&, const MethodKey&) = default;
};

struct ReportEntry {
    int n = 0;
    MethodId method = MethodId::SeriesOracle;
    Rational value;
    bool agrees_with_oracle = true;
    /// Method is on the caller's known-discrepancy list.
    bool known = false;
};

struct ReportSummary {
    std::size_t checked = 0;
    std::size_t agreements = 0;
    std::vector<MethodKey> mismatches;             // every disagreement
    std::vector<MethodKey> known_discrepancies;    // disagreements on allowlisted methods
    std::vector<MethodKey> unexpected_mismatches;  // the rest
};

struct VerificationReport {
    int max_n = 0;
    MethodSet known;
    /// One entry per supported (n, method), ascending n then method name.
    std::vector<ReportEntry> entries;
    ReportSummary summary;

    bool ok() const { return summary.unexpected_mismatches.empty(); }
};

/// Runs every method supporting n for n = 0..max_n. Indices are spread over
/// `threads` workers; the merged report does not depend on the count.
VerificationReport cross_verify(int max_n, const MethodSet& known, unsigned threads = 1);

struct IdentityCheck {
    std::string identity;
    int n = 0;
    int k = 0;
    std::string args;
    Rational lhs;
    Rational rhs;
    bool passed = false;
};

struct IdentityTally {
    std::string identity;
    std::size_t checked = 0;
    std::size_t passed = 0;
};

struct IdentityReport {
    int max_n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;
    std::vector<IdentityTally> tallies;

    bool ok() const;
};

/// Deterministic sweeps over every 1 <= k <= n <= max_n plus `trials`
/// seeded random rational argument vectors per randomized identity.
/// Identities:
///   zero-one-closed-form      bell_zero_one vs partition sum at (0,1,...,1)
///   reciprocal-closed-form    bell_reciprocal_args vs partition sum at (1/2,1/3,...)
///   stirling-egf              (e^t-1)^k/k! coefficients vs the Stirling table
///   reciprocal-egf            (sum t^m/(m+1)!)^k/k! coefficients vs bell_reciprocal_args
///   scaling                   both sides of the x_i/i scaling identity (all-ones + random)
///   partition-vs-recurrence   two Bell evaluators on random arguments
///   partition-vs-egf          partition sum vs Bell EGF coefficient on random arguments
IdentityReport identity_suite(int max_n, int trials, std::uint64_t seed);

/// Random rational with numerator in [-9, 9] and denominator in [1, 9].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed);
    Rational next();
    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

// Rendering. JSON is two-space indented; reparsing and re-dumping with the
// same settings reproduces it byte for byte.
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_plain(const VerificationReport& report);

std::string to_json(const IdentityReport& report);
std::string to_csv(const IdentityReport& report);
std::string to_plain(const IdentityReport& report);

}  // namespace bernstir
