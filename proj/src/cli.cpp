#include "bernstir/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bernstir/bell.hpp"
#include "bernstir/series.hpp"
#include "bernstir/stirling.hpp"
#include "json.hpp"

namespace bernstir::cli {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

int request_cap() {
    const char* raw = std::getenv("BERNSTIR_MAX_N");
    if (raw == nullptr || *raw == '\0') return kDefaultRequestCap;
    const Integer cap = parse_integer(raw);
    if (cap < 1 || !cap.fits_sint_p()) {
        throw ArgumentError("BERNSTIR_MAX_N must be a positive integer, got '" + std::string(raw) + "'");
    }
    return static_cast<int>(cap.get_si());
}

namespace {

void enforce_cap(int n, std::string_view what) {
    const int cap = request_cap();
    if (n > cap) {
        throw ArgumentError(std::string(what) + " = " + std::to_string(n) + " exceeds BERNSTIR_MAX_N = " +
                            std::to_string(cap));
    }
}

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.emplace_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

MethodId require_method(std::string_view name) {
    if (auto m = parse_method(name)) return *m;
    throw ArgumentError("unknown method '" + std::string(name) +
                        "' (expected oracle, theorem, bell, logan, guo-qi, double-stirling, alternating)");
}

MethodSet method_set(const std::vector<std::string>& names) {
    MethodSet out;
    for (const auto& name : names) {
        for (const auto& piece : split_commas(name)) {
            if (!piece.empty()) out.insert(require_method(piece));
        }
    }
    return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// --- bernoulli -------------------------------------------------------------

struct BernoulliOptions {
    int n = 0;
    std::string method = "theorem";
};

int cmd_bernoulli(const BernoulliOptions& opt, OutputFormat format, std::ostream& out) {
    enforce_cap(opt.n, "n");
    const std::string n_text = std::to_string(opt.n);

    if (opt.method != "all") {
        const MethodId method = require_method(opt.method);
        const Rational value = bernoulli(opt.n, method);  // UnsupportedIndex propagates as usage error
        switch (format) {
            case OutputFormat::plain: out << value << '\n'; break;
            case OutputFormat::json:
                out << dump(ordered_json{{"n", opt.n}, {"method", opt.method}, {"value", value.str()}});
                break;
            case OutputFormat::csv: out << "n,method,value\n" << n_text << ',' << opt.method << ',' << value << '\n'; break;
        }
        return kExitOk;
    }

    const BernoulliEngine engine(opt.n);
    std::vector<std::pair<std::string, std::string>> rows;
    for (MethodId m : kAllMethods) {
        rows.emplace_back(method_name(m), supports(m, opt.n) ? engine.compute(opt.n, m).str() : "unsupported");
    }
    switch (format) {
        case OutputFormat::plain:
            for (const auto& [method, value] : rows) out << std::left << std::setw(17) << method << value << '\n';
            break;
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& [method, value] : rows) {
                arr.push_back(ordered_json{{"n", opt.n}, {"method", method}, {"value", value}});
            }
            out << dump(arr);
            break;
        }
        case OutputFormat::csv:
            out << "n,method,value\n";
            for (const auto& [method, value] : rows) out << n_text << ',' << method << ',' << value << '\n';
            break;
    }
    return kExitOk;
}

// --- stirling --------------------------------------------------------------

int cmd_stirling(int max_n, OutputFormat format, std::ostream& out) {
    enforce_cap(max_n, "max-n");
    const StirlingTable table = stirling_recurrence_table(max_n);
    switch (format) {
        case OutputFormat::plain:
            for (int n = 0; n <= max_n; ++n) {
                out << n << ':';
                for (int k = 0; k <= n; ++k) out << ' ' << table.at(n, k);
                out << '\n';
            }
            break;
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (int n = 0; n <= max_n; ++n) {
                for (int k = 0; k <= n; ++k) {
                    arr.push_back(ordered_json{{"n", n}, {"k", k}, {"value", table.at(n, k).get_str()}});
                }
            }
            out << dump(arr);
            break;
        }
        case OutputFormat::csv:
            out << "n,k,value\n";
            for (int n = 0; n <= max_n; ++n) {
                for (int k = 0; k <= n; ++k) out << n << ',' << k << ',' << table.at(n, k) << '\n';
            }
            break;
    }
    return kExitOk;
}

// --- bell ------------------------------------------------------------------

struct BellOptions {
    int n = 1;
    int k = 1;
    std::string args;
    std::string method = "recurrence";
};

int cmd_bell(const BellOptions& opt, OutputFormat format, std::ostream& out) {
    enforce_cap(opt.n, "n");
    const BellArgs args = BellArgs::parse(opt.args);
    Rational value;
    if (opt.method == "partition") {
        value = bell_partition_sum(opt.n, opt.k, args);
    } else if (opt.method == "recurrence") {
        value = bell_recurrence(opt.n, opt.k, args);
    } else if (opt.method == "egf") {
        value = bell_egf_coeff(opt.n, opt.k, args);
    } else if (opt.method == "zero-one") {
        value = Rational(bell_zero_one(opt.n, opt.k, StirlingTable(opt.n)));
    } else if (opt.method == "reciprocal") {
        value = bell_reciprocal_args(opt.n, opt.k, StirlingTable(opt.n + opt.k));
    } else {
        throw ArgumentError("unknown bell method '" + opt.method +
                            "' (expected partition, recurrence, egf, zero-one, reciprocal)");
    }
    switch (format) {
        case OutputFormat::plain: out << value << '\n'; break;
        case OutputFormat::json:
            out << dump(ordered_json{{"n", opt.n},
                                     {"k", opt.k},
                                     {"method", opt.method},
                                     {"args", args.str()},
                                     {"value", value.str()}});
            break;
        case OutputFormat::csv:
            out << "n,k,method,value\n" << opt.n << ',' << opt.k << ',' << opt.method << ',' << value << '\n';
            break;
    }
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
    int max_n = 1;
    bool allow_known = false;
    std::vector<std::string> known;
    unsigned threads = 1;
    bool identities = false;
    int identity_max_n = 8;
    int trials = 50;
    std::uint64_t seed = 7;
};

int cmd_verify(const VerifyOptions& opt, OutputFormat format, std::ostream& out) {
    enforce_cap(opt.max_n, "max-n");
    MethodSet known = method_set(opt.known);
    if (opt.allow_known) known.insert(MethodId::AlternatingDoubleSum);

    const VerificationReport report = cross_verify(opt.max_n, known, opt.threads);
    std::optional<IdentityReport> identities;
    if (opt.identities) identities = identity_suite(opt.identity_max_n, opt.trials, opt.seed);

    switch (format) {
        case OutputFormat::plain:
            out << to_plain(report);
            if (identities) out << '\n' << to_plain(*identities);
            break;
        case OutputFormat::csv:
            out << to_csv(report);
            if (identities) out << '\n' << to_csv(*identities);
            break;
        case OutputFormat::json:
            if (identities) {
                ordered_json doc;
                doc["cross_verify"] = ordered_json::parse(to_json(report));
                doc["identity_suite"] = ordered_json::parse(to_json(*identities));
                out << dump(doc);
            } else {
                out << to_json(report);
            }
            break;
    }
    const bool ok = report.ok() && (!identities || identities->ok());
    return ok ? kExitOk : kExitMismatch;
}

// --- bench -----------------------------------------------------------------

struct BenchOptions {
    int max_n = 2;
    std::string methods;
    std::vector<std::string> known{"alternating"};
};

int cmd_bench(const BenchOptions& opt, OutputFormat format, std::ostream& out, std::ostream& err) {
    enforce_cap(opt.max_n, "max-n");
    std::vector<MethodId> methods;
    if (opt.methods.empty()) {
        methods.assign(kAllMethods.begin(), kAllMethods.end());
    } else {
        for (const auto& name : split_commas(opt.methods)) methods.push_back(require_method(name));
    }
    const BenchResult result = run_bench(opt.max_n, methods, method_set(opt.known));
    out << render_bench(result, format);
    if (!result.unexpected_mismatches.empty()) {
        err << "bench: values disagree with the oracle at";
        for (const auto& key : result.unexpected_mismatches) err << " (" << key.n << ", " << method_name(key.method) << ")";
        err << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

BenchResult run_bench(int max_n, const std::vector<MethodId>& methods, const MethodSet& known) {
    if (max_n < 2) throw ArgumentError("bench: max-n must be >= 2");
    using clock = std::chrono::steady_clock;
    const std::vector<Rational> oracle = bernoulli_series(max_n);

    BenchResult result;
    for (int n = 0; n <= max_n; ++n) {
        for (MethodId m : methods) {
            if (!supports(m, n)) continue;
            const auto start = clock::now();
            const Rational value = bernoulli(n, m);
            const auto stop = clock::now();

            BenchRecord rec;
            rec.n = n;
            rec.method = method_name(m);
            rec.value = value.str();
            rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
            rec.flagged = known.contains(m);
            rec.agrees_with_oracle = (value == oracle[static_cast<std::size_t>(n)]);
            if (!rec.agrees_with_oracle && !rec.flagged) result.unexpected_mismatches.push_back(MethodKey{n, m});
            result.records.push_back(std::move(rec));
        }
    }
    return result;
}

std::string render_bench(const BenchResult& result, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::csv:
            os << "n,method,value,micros\n";
            for (const auto& r : result.records) os << r.n << ',' << r.method << ',' << r.value << ',' << r.micros << '\n';
            break;
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : result.records) {
                arr.push_back(ordered_json{{"n", r.n}, {"method", r.method}, {"value", r.value}, {"micros", r.micros}});
            }
            os << dump(arr);
            break;
        }
        case OutputFormat::plain:
            os << std::left << std::setw(5) << "n" << std::setw(17) << "method" << std::setw(12) << "micros"
               << "value\n";
            for (const auto& r : result.records) {
                os << std::setw(5) << r.n << std::setw(17) << r.method << std::setw(12) << r.micros << r.value;
                if (!r.agrees_with_oracle) os << (r.flagged ? "  (known discrepancy)" : "  (MISMATCH)");
                os << '\n';
            }
            break;
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bernoulli, Stirling and partial Bell polynomial computations", "bernstir"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name;
    app.add_option("--format", format_name, "Output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    BernoulliOptions bern;
    auto* bern_cmd = app.add_subcommand("bernoulli", "Compute B_n by one method or all of them");
    bern_cmd->add_option("n", bern.n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);
    bern_cmd->add_option("--method", bern.method,
                         "oracle, theorem, bell, logan, guo-qi, double-stirling, alternating or all")
        ->capture_default_str();

    int stirling_max_n = 0;
    auto* stir_cmd = app.add_subcommand("stirling", "Dump the triangle S(n,k), 0 <= k <= n <= max-n");
    stir_cmd->add_option("--max-n", stirling_max_n, "Last row")->required()->check(CLI::NonNegativeNumber);

    BellOptions bell;
    auto* bell_cmd = app.add_subcommand("bell", "Evaluate a partial Bell polynomial B_{n,k}");
    bell_cmd->add_option("n", bell.n, "n >= k")->required()->check(CLI::PositiveNumber);
    bell_cmd->add_option("k", bell.k, "k >= 1")->required()->check(CLI::PositiveNumber);
    bell_cmd->add_option("--args", bell.args, "x_1,...,x_{n-k+1} as comma-separated p/q tokens");
    bell_cmd->add_option("--method", bell.method, "partition, recurrence, egf, zero-one or reciprocal")
        ->capture_default_str();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every method against the series oracle");
    verify_cmd->add_option("--max-n", verify.max_n, "Check n = 0..max-n")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--allow-known", verify.allow_known,
                         "Treat the alternating double sum as a known discrepancy");
    verify_cmd->add_option("--known", verify.known, "Additional known-discrepancy methods");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--identities", verify.identities, "Also run the Bell/Stirling identity suite");
    verify_cmd->add_option("--identity-max-n", verify.identity_max_n, "Largest n for the identity suite")
        ->capture_default_str()
        ->check(CLI::Range(2, 14));
    verify_cmd->add_option("--trials", verify.trials, "Random trials per randomized identity")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify.seed, "Identity suite seed")->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time every method for n = 0..max-n (default format csv)");
    bench_cmd->add_option("--max-n", bench.max_n, "Largest n (>= 2)")->required()->check(CLI::Range(2, 1 << 30));
    bench_cmd->add_option("--methods", bench.methods, "Comma-separated methods (default: all)");
    bench_cmd->add_option("--known", bench.known, "Known-discrepancy methods")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    OutputFormat format = OutputFormat::plain;
    if (!format_name.empty()) {
        format = *parse_format(format_name);
    } else if (bench_cmd->parsed()) {
        format = OutputFormat::csv;
    }

    try {
        if (bern_cmd->parsed()) return cmd_bernoulli(bern, format, out);
        if (stir_cmd->parsed()) return cmd_stirling(stirling_max_n, format, out);
        if (bell_cmd->parsed()) return cmd_bell(bell, format, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, format, out);
        if (bench_cmd->parsed()) return cmd_bench(bench, format, out, err);
    } catch (const UnsupportedIndex& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bernstir::cli
