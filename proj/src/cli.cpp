#include "supercong/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <thread>

#include "CLI11.hpp"

#include "supercong/binomial.hpp"
#include "supercong/identity.hpp"
#include "supercong/oracle.hpp"
#include "supercong/primes.hpp"

namespace supercong {

namespace {

constexpr std::uint64_t kIdentitySalt = 3;

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<std::string> format_names() { return {"text", "json", "csv"}; }

CheckRecord count_record(unsigned n, std::string check, unsigned passing, unsigned total) {
    CheckRecord r;
    r.check = std::move(check);
    r.params = {{"n", std::to_string(n)}};
    r.lhs = std::to_string(passing);
    r.rhs = std::to_string(total);
    r.ok = passing == total;
    return r;
}

mpz_class small_random(std::mt19937_64& rng) {
    return mpz_class(static_cast<long>(rng() % 2001) - 1000);
}

}  // namespace

const std::vector<std::string>& identity_check_names() {
    static const std::vector<std::string> names{"gould", "gould_numeric", "gf", "trinomial",
                                                "alternating"};
    return names;
}

Command parse_args(std::span<const std::string> args) {
    CLI::App app{"Verify supercongruences for sums of squared central binomial coefficients mod p^2",
                 "supercong"};
    app.require_subcommand(1);

    ScanConfig scan;
    scan.jobs = default_jobs();
    std::string scan_format = "text";
    auto* scan_cmd = app.add_subcommand("scan", "run congruence checks over a prime range");
    scan_cmd->add_option("--min", scan.min_p, "smallest prime considered")->capture_default_str();
    scan_cmd->add_option("--max", scan.max_p, "largest prime considered")->capture_default_str();
    scan_cmd->add_option("--check", scan.checks, "checks to run (repeatable or comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(scan_check_names()));
    scan_cmd->add_option("--trials", scan.trials, "random parameter draws per prime")->capture_default_str();
    scan_cmd->add_option("--seed", scan.seed, "global seed for random parameters")->capture_default_str();
    scan_cmd->add_option("--jobs", scan.jobs, "worker threads")
        ->envname("SUPERCONG_JOBS")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", scan_format, "text, json or csv")
        ->check(CLI::IsMember(format_names()));
    scan_cmd->add_flag("--fail-fast", scan.fail_fast, "stop issuing primes after the first failure");
    scan_cmd->add_flag("--strict", scan.strict, "count informational records in the exit status");

    IdentityConfig identity;
    std::string identity_format = "text";
    auto* identity_cmd = app.add_subcommand("identity", "exact identity checks over a range of n");
    identity_cmd->add_option("--min-n", identity.min_n)->capture_default_str();
    identity_cmd->add_option("--max-n", identity.max_n)->capture_default_str();
    identity_cmd->add_option("--check", identity.checks)
        ->delimiter(',')
        ->check(CLI::IsMember(identity_check_names()));
    identity_cmd->add_option("--points", identity.points, "random (a, b) points per n")
        ->capture_default_str();
    identity_cmd->add_option("--seed", identity.seed)->capture_default_str();
    identity_cmd->add_option("--format", identity_format)->check(CLI::IsMember(format_names()));

    OracleConfig oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "print one exact sum");
    oracle_cmd->add_option("--p", oracle.p, "odd prime")->required();
    oracle_cmd->add_option("--kind", oracle.kind)->required()->check(CLI::IsMember(oracle_kinds()));
    oracle_cmd->add_option("--alpha", oracle.alpha, "integer or rational")->capture_default_str();
    oracle_cmd->add_option("--beta", oracle.beta, "integer or rational")->capture_default_str();
    oracle_cmd->add_option("--t", oracle.t, "integer or rational")->capture_default_str();

    PartitionConfig partition;
    std::uint64_t single_p = 0;
    auto* partition_cmd = app.add_subcommand("partition", "print p = x^2 + y^2 with x = 1 (mod 4)");
    auto* p_opt = partition_cmd->add_option("--p", single_p, "a single prime");
    partition_cmd->add_option("--min", partition.min_p)->excludes(p_opt);
    partition_cmd->add_option("--max", partition.max_p)->excludes(p_opt);

    std::vector<const char*> argv{"supercong"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        return HelpRequest{target->help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help());
    }

    try {
        if (scan_cmd->parsed()) {
            scan.format = parse_format(scan_format);
            scan.validate();
            return scan;
        }
        if (identity_cmd->parsed()) {
            identity.format = parse_format(identity_format);
            if (identity.max_n < identity.min_n) throw InvalidArgument("--max-n is below --min-n");
            if (identity.checks.empty()) throw InvalidArgument("no checks selected");
            return identity;
        }
        if (oracle_cmd->parsed()) {
            if (!is_prime(oracle.p) || oracle.p < 3) throw InvalidArgument("--p must be an odd prime");
            return oracle;
        }
        if (single_p != 0) {
            if (!is_prime(single_p)) throw InvalidArgument("--p must be prime");
            partition.min_p = partition.max_p = single_p;
        }
        if (partition.max_p < partition.min_p) throw InvalidArgument("--max is below --min");
        return partition;
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

std::vector<CheckRecord> run_identity(const IdentityConfig& config) {
    std::vector<CheckRecord> out;
    const auto selected = [&](std::string_view name) {
        return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
    };
    for (unsigned n = config.min_n; n <= config.max_n; ++n) {
        std::mt19937_64 rng(prime_seed(config.seed, n, kIdentitySalt));
        std::vector<std::pair<mpz_class, mpz_class>> points;
        for (unsigned i = 0; i < config.points; ++i) {
            mpz_class a = small_random(rng);
            mpz_class b = small_random(rng);
            points.emplace_back(std::move(a), std::move(b));
        }
        for (const auto& name : identity_check_names()) {
            if (!selected(name)) continue;
            if (name == "gould") {
                out.push_back(count_record(n, name, gould_polynomial_check(n) ? 1 : 0, 1));
            } else if (name == "gould_numeric") {
                const auto passing = std::count_if(points.begin(), points.end(), [&](const auto& ab) {
                    return gould_lhs(n, ab.first, ab.second) == gould_rhs(n, ab.first, ab.second);
                });
                out.push_back(count_record(n, name, static_cast<unsigned>(passing), config.points));
            } else if (name == "gf") {
                const auto passing = std::count_if(points.begin(), points.end(), [&](const auto& ab) {
                    return gf_coefficient_check(n, ab.first, ab.second);
                });
                out.push_back(count_record(n, name, static_cast<unsigned>(passing), config.points));
            } else if (name == "trinomial") {
                unsigned passing = 0;
                for (unsigned k = 0; k <= n; ++k) passing += trinomial_revision_check(n, k) ? 1 : 0;
                out.push_back(count_record(n, name, passing, n + 1));
            } else if (name == "alternating") {
                out.push_back(count_record(n, name, alternating_identity_check(n) ? 1 : 0, 1));
            }
        }
    }
    return out;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Command command;
    try {
        command = parse_args(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (const auto* help = std::get_if<HelpRequest>(&command)) {
            out << help->text;
            return 0;
        }
        if (const auto* scan = std::get_if<ScanConfig>(&command)) {
            const auto records = run_scan(*scan);
            out << format_report(records, scan->format);
            return exit_status(records, scan->strict);
        }
        if (const auto* identity = std::get_if<IdentityConfig>(&command)) {
            const auto records = run_identity(*identity);
            out << format_report(records, identity->format);
            return exit_status(records, true);
        }
        if (const auto* oracle = std::get_if<OracleConfig>(&command)) {
            OracleParams params;
            params.alpha = parse_rational(oracle->alpha);
            params.beta = parse_rational(oracle->beta);
            params.t = parse_rational(oracle->t);
            const OracleSum sum = oracle_sum(oracle->kind, oracle->p, params);
            out << "kind: " << oracle->kind << '\n'
                << "p: " << oracle->p << '\n'
                << "value: " << sum.value.get_str() << '\n'
                << "scale: " << sum.scale.get_str() << '\n'
                << "residue: " << sum.reduce(PrimeContext(oracle->p)).str() << '\n';
            return 0;
        }
        const auto& partition = std::get<PartitionConfig>(command);
        for (const std::uint64_t p : primes_in_range(std::max<std::uint64_t>(partition.min_p, 2),
                                                     partition.max_p)) {
            if (p % 4 != 1) {
                if (partition.min_p == partition.max_p) {
                    err << "error: " << p << " is not 1 mod 4\n";
                    return 2;
                }
                continue;
            }
            const QuadraticPartition q = cornacchia(p);
            out << q.p << ' ' << q.x << ' ' << q.y << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace supercong
