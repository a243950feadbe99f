#include "bernstir/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "bernstir/bell.hpp"
#include "bernstir/series.hpp"
#include "bernstir/stirling.hpp"
#include "json.hpp"

namespace bernstir {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// cross_verify

namespace {

std::vector<MethodId> methods_by_name(int n) {
    auto methods = methods_supporting(n);
    std::sort(methods.begin(), methods.end(),
              [](MethodId a, MethodId b) { return method_name(a) < method_name(b); });
    return methods;
}

std::vector<ReportEntry> entries_for(int n, const BernoulliEngine& engine, const MethodSet& known) {
    const Rational& expected = engine.oracle()[static_cast<std::size_t>(n)];
    std::vector<ReportEntry> out;
    for (MethodId m : methods_by_name(n)) {
        ReportEntry e;
        e.n = n;
        e.method = m;
        e.value = engine.compute(n, m);
        e.agrees_with_oracle = (e.value == expected);
        e.known = known.contains(m);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

VerificationReport cross_verify(int max_n, const MethodSet& known, unsigned threads) {
    if (max_n < 1) throw ArgumentError("cross_verify: max_n must be >= 1");
    const BernoulliEngine engine(max_n);

    std::vector<std::vector<ReportEntry>> per_n(static_cast<std::size_t>(max_n) + 1);
    const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(max_n) + 1);
    if (workers == 1) {
        for (int n = 0; n <= max_n; ++n) per_n[static_cast<std::size_t>(n)] = entries_for(n, engine, known);
    } else {
        // Strided assignment balances the cost, which grows with n.
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int n = static_cast<int>(w); n <= max_n; n += static_cast<int>(workers)) {
                    per_n[static_cast<std::size_t>(n)] = entries_for(n, engine, known);
                }
            });
        }
    }

    VerificationReport report;
    report.max_n = max_n;
    report.known = known;
    for (auto& bucket : per_n) {
        for (auto& e : bucket) {
            const MethodKey key{e.n, e.method};
            ++report.summary.checked;
            if (e.agrees_with_oracle) {
                ++report.summary.agreements;
            } else {
                report.summary.mismatches.push_back(key);
                if (e.known) {
                    report.summary.known_discrepancies.push_back(key);
                } else {
                    report.summary.unexpected_mismatches.push_back(key);
                }
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// identity_suite

RationalSampler::RationalSampler(std::uint64_t seed) : engine_(seed) {}

int RationalSampler::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Rational RationalSampler::next() {
    const int num = uniform(-9, 9);
    const int den = uniform(1, 9);
    return Rational(Integer(num), Integer(den));
}

bool IdentityReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

class SuiteBuilder {
public:
    explicit SuiteBuilder(IdentityReport& report) : report_(report) {}

    void record(std::string_view identity, int n, int k, std::string args, Rational lhs, Rational rhs) {
        IdentityCheck c;
        c.identity = identity;
        c.n = n;
        c.k = k;
        c.args = std::move(args);
        c.passed = (lhs == rhs);
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);

        auto it = std::find_if(report_.tallies.begin(), report_.tallies.end(),
                               [&](const IdentityTally& t) { return t.identity == identity; });
        if (it == report_.tallies.end()) {
            report_.tallies.push_back(IdentityTally{std::string(identity), 0, 0});
            it = std::prev(report_.tallies.end());
        }
        ++it->checked;
        if (c.passed) ++it->passed;
        report_.checks.push_back(std::move(c));
    }

private:
    IdentityReport& report_;
};

std::string join(std::span<const Rational> xs) { return BellArgs(std::vector<Rational>(xs.begin(), xs.end())).str(); }

}  // namespace

IdentityReport identity_suite(int max_n, int trials, std::uint64_t seed) {
    if (max_n < 2) throw ArgumentError("identity_suite: max_n must be >= 2");
    if (trials < 1) throw ArgumentError("identity_suite: trials must be >= 1");

    IdentityReport report;
    report.max_n = max_n;
    report.trials = trials;
    report.seed = seed;
    SuiteBuilder suite(report);
    const StirlingTable table(2 * max_n);
    RationalSampler sampler(seed);

    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto args = BellArgs::zero_one(static_cast<std::size_t>(n - k + 1));
            suite.record("zero-one-closed-form", n, k, args.str(), Rational(bell_zero_one(n, k, table)),
                         bell_partition_sum(n, k, args));
        }
    }
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto args = BellArgs::reciprocal(static_cast<std::size_t>(n - k + 1));
            suite.record("reciprocal-closed-form", n, k, args.str(), bell_reciprocal_args(n, k, table),
                         bell_partition_sum(n, k, args));
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            suite.record("stirling-egf", n, k, "", stirling_egf_coeff(n, k), Rational(table.at(n, k)));
        }
    }
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            // (1/k!) (sum_{m>=1} t^m/(m+1)!)^k is the Bell EGF at x_m = 1/(m+1).
            const auto args = BellArgs::reciprocal(static_cast<std::size_t>(n - k + 1));
            suite.record("reciprocal-egf", n, k, args.str(), bell_egf_coeff(n, k, args),
                         bell_reciprocal_args(n, k, table));
        }
    }

    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
            auto sides = bell_scaling_identity(n, k, ones);
            suite.record("scaling", n, k, join(ones), std::move(sides.lhs), std::move(sides.rhs));
        }
    }
    for (int t = 0; t < trials; ++t) {
        const int n = sampler.uniform(1, max_n);
        const int k = sampler.uniform(1, n);
        std::vector<Rational> from_x2;
        for (int i = 0; i < n; ++i) from_x2.push_back(sampler.next());
        auto sides = bell_scaling_identity(n, k, from_x2);
        suite.record("scaling", n, k, join(from_x2), std::move(sides.lhs), std::move(sides.rhs));
    }

    for (int t = 0; t < trials; ++t) {
        const int n = sampler.uniform(1, max_n);
        const int k = sampler.uniform(1, n);
        std::vector<Rational> xs;
        for (int i = 0; i < n - k + 1; ++i) xs.push_back(sampler.next());
        const BellArgs args(std::move(xs));
        suite.record("partition-vs-recurrence", n, k, args.str(), bell_partition_sum(n, k, args),
                     bell_recurrence(n, k, args));
    }
    for (int t = 0; t < trials; ++t) {
        const int n = sampler.uniform(1, max_n);
        const int k = sampler.uniform(1, n);
        std::vector<Rational> xs;
        for (int i = 0; i < n - k + 1; ++i) xs.push_back(sampler.next());
        const BellArgs args(std::move(xs));
        suite.record("partition-vs-egf", n, k, args.str(), bell_partition_sum(n, k, args),
                     bell_egf_coeff(n, k, args));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

ordered_json keys_json(const std::vector<MethodKey>& keys) {
    ordered_json arr = ordered_json::array();
    for (const auto& k : keys) {
        arr.push_back(ordered_json{{"n", k.n}, {"method", std::string(method_name(k.method))}});
    }
    return arr;
}

std::string status_of(const ReportEntry& e) {
    if (e.agrees_with_oracle) return "agree";
    return e.known ? "known" : "mismatch";
}

std::string keys_plain(const std::vector<MethodKey>& keys) {
    if (keys.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ' ';
        out += "(" + std::to_string(keys[i].n) + ", " + std::string(method_name(keys[i].method)) + ")";
    }
    return out;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
    ordered_json doc;
    doc["max_n"] = report.max_n;
    ordered_json known = ordered_json::array();
    for (MethodId m : report.known) known.push_back(std::string(method_name(m)));
    doc["known"] = std::move(known);
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        entries.push_back(ordered_json{{"n", e.n},
                                       {"method", std::string(method_name(e.method))},
                                       {"value", e.value.str()},
                                       {"agrees_with_oracle", e.agrees_with_oracle},
                                       {"known_discrepancy", e.known}});
    }
    doc["entries"] = std::move(entries);
    doc["summary"] = ordered_json{{"checked", report.summary.checked},
                                  {"agreements", report.summary.agreements},
                                  {"mismatches", keys_json(report.summary.mismatches)},
                                  {"known_discrepancies", keys_json(report.summary.known_discrepancies)},
                                  {"unexpected_mismatches", keys_json(report.summary.unexpected_mismatches)}};
    return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
    std::string out = "n,method,value,status\n";
    for (const auto& e : report.entries) {
        out += std::to_string(e.n) + "," + std::string(method_name(e.method)) + "," + e.value.str() + "," +
               status_of(e) + "\n";
    }
    return out;
}

std::string to_plain(const VerificationReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(17) << "method" << std::setw(36) << "value"
       << "status\n";
    for (const auto& e : report.entries) {
        os << std::setw(5) << e.n << std::setw(17) << method_name(e.method) << std::setw(36) << e.value.str()
           << status_of(e) << '\n';
    }
    const auto& s = report.summary;
    os << "\nchecked " << s.checked << ", agreements " << s.agreements << ", mismatches " << s.mismatches.size()
       << " (known " << s.known_discrepancies.size() << ", unexpected " << s.unexpected_mismatches.size()
       << ")\n";
    os << "known discrepancies: " << keys_plain(s.known_discrepancies) << '\n';
    os << "unexpected mismatches: " << keys_plain(s.unexpected_mismatches) << '\n';
    return os.str();
}

std::string to_json(const IdentityReport& report) {
    ordered_json doc;
    doc["max_n"] = report.max_n;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    ordered_json tallies = ordered_json::array();
    for (const auto& t : report.tallies) {
        tallies.push_back(ordered_json{{"identity", t.identity}, {"checked", t.checked}, {"passed", t.passed}});
    }
    doc["identities"] = std::move(tallies);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back(ordered_json{{"identity", c.identity},
                                      {"n", c.n},
                                      {"k", c.k},
                                      {"args", c.args},
                                      {"lhs", c.lhs.str()},
                                      {"rhs", c.rhs.str()},
                                      {"passed", c.passed}});
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
}

std::string to_csv(const IdentityReport& report) {
    // args contain commas, so they are joined with ';' to keep the CSV unquoted.
    std::string out = "identity,n,k,args,lhs,rhs,passed\n";
    for (const auto& c : report.checks) {
        std::string args = c.args;
        std::replace(args.begin(), args.end(), ',', ';');
        out += c.identity + "," + std::to_string(c.n) + "," + std::to_string(c.k) + "," + args + "," + c.lhs.str() +
               "," + c.rhs.str() + "," + (c.passed ? "true" : "false") + "\n";
    }
    return out;
}

std::string to_plain(const IdentityReport& report) {
    std::ostringstream os;
    os << "identity suite: max_n " << report.max_n << ", trials " << report.trials << ", seed " << report.seed
       << '\n';
    for (const auto& t : report.tallies) {
        os << "  " << std::left << std::setw(26) << t.identity << t.passed << "/" << t.checked << " passed\n";
    }
    for (const auto& c : report.checks) {
        if (c.passed) continue;
        os << "FAILED " << c.identity << " n=" << c.n << " k=" << c.k << " args=" << c.args << ": " << c.lhs
           << " != " << c.rhs << '\n';
    }
    return os.str();
}

}  // namespace bernstir
