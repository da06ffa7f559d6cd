#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/checks.hpp"

namespace supercong {

enum class ReportFormat { text, json, csv };

/// Per-prime congruence checks, in report order.
const std::vector<std::string>& scan_check_names();

struct ScanConfig {
    std::uint64_t min_p = 3;
    std::uint64_t max_p = 3;
    std::vector<std::string> checks = scan_check_names();
    unsigned trials = 8;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    ReportFormat format = ReportFormat::text;
    bool fail_fast = false;
    bool strict = false;

    /// Throws InvalidArgument when the invariants do not hold.
    void validate() const;
};

/// Seed of the random stream for prime p; `salt` separates independent streams.
std::uint64_t prime_seed(std::uint64_t global_seed, std::uint64_t p, std::uint64_t salt);

/// The (alpha, beta) pairs of a prime: the fixed pairs (0,-1), (1,0), (1/2,-1/2)
/// followed by `trials` seeded random pairs.
std::vector<std::pair<Residue, Residue>> theorem_pairs(const PrimeContext& ctx, unsigned trials,
                                                       std::uint64_t seed);

/// t values for remark_i_check: 0, 1, 2, 1/2 and `trials` seeded random residues.
std::vector<Residue> remark_parameters(const PrimeContext& ctx, unsigned trials, std::uint64_t seed);

/// All selected checks for a single prime. Checks that do not apply to p's
/// residue class mod 4 are skipped.
std::vector<CheckRecord> records_for_prime(const PrimeContext& ctx, const ScanConfig& config);

/// Records for every prime in range, ascending by p, identical for any jobs value.
/// With fail_fast, the report ends with the first prime that has a counted failure.
std::vector<CheckRecord> run_scan(const ScanConfig& config);

/// A record counts towards the exit status unless it is informational and strict is off.
bool counts_as_failure(const CheckRecord& record, bool strict);

/// 0 when every counted record is ok, 1 otherwise.
int exit_status(const std::vector<CheckRecord>& records, bool strict);

std::string format_report(const std::vector<CheckRecord>& records, ReportFormat format);

/// Inverse of format_report(.., json).
std::vector<CheckRecord> parse_json_report(std::string_view text);

ReportFormat parse_format(std::string_view name);

/// Percent-encodes everything but RFC 3986 unreserved characters.
std::string url_encode(std::string_view text);

}  // namespace supercong
