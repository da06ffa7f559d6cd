#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "supercong/scan.hpp"

namespace supercong {

/// Malformed command line; the CLI exits with status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

const std::vector<std::string>& identity_check_names();

struct IdentityConfig {
    unsigned min_n = 0;
    unsigned max_n = 20;
    std::vector<std::string> checks = identity_check_names();
    unsigned points = 8;  ///< random (a, b) per n for the numeric checks
    std::uint64_t seed = 0;
    ReportFormat format = ReportFormat::text;
};

struct OracleConfig {
    std::uint64_t p = 3;
    std::string kind;
    std::string alpha = "0";
    std::string beta = "0";
    std::string t = "0";
};

struct PartitionConfig {
    std::uint64_t min_p = 5;
    std::uint64_t max_p = 5;
};

struct HelpRequest {
    std::string text;
};

using Command = std::variant<ScanConfig, IdentityConfig, OracleConfig, PartitionConfig, HelpRequest>;

/// Parses arguments (without the program name). Throws UsageError.
Command parse_args(std::span<const std::string> args);

/// Identity checks for n in [min_n, max_n]; records carry p = 0 and the index in params["n"].
std::vector<CheckRecord> run_identity(const IdentityConfig& config);

/// Full command-line entry point. Returns the process exit status.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace supercong
