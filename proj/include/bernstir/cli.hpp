#pragma once

// Command-line front end: bernoulli, stirling, bell, verify, bench.
// Exit codes: 0 success, 2 verification mismatch, 64 usage error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernstir/bernoulli.hpp"
#include "bernstir/verify.hpp"

namespace bernstir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;

inline constexpr int kDefaultRequestCap = 10000;

enum class OutputFormat { plain, json, csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Upper bound on any requested index, from BERNSTIR_MAX_N (default 10000).
/// Throws ArgumentError if the variable is set but not a positive integer.
int request_cap();

struct BenchRecord {
    int n = 0;
    std::string method;
    std::string value;
    std::int64_t micros = 0;
    /// Method is on the known-discrepancy list.
    bool flagged = false;
    bool agrees_with_oracle = true;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<MethodKey> unexpected_mismatches;
};

/// Times the stand-alone bernoulli(n, method) call for every supported
/// (n, method) with 0 <= n <= max_n, one method at a time on this thread,
/// and compares each value with the series oracle.
BenchResult run_bench(int max_n, const std::vector<MethodId>& methods, const MethodSet& known);

std::string render_bench(const BenchResult& result, OutputFormat format);

/// Runs one command line (arguments without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bernstir::cli
