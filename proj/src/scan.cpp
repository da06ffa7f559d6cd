#include "supercong/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "supercong/primes.hpp"

namespace supercong {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kPairSalt = 1;
constexpr std::uint64_t kRemarkSalt = 2;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool selected(const ScanConfig& config, std::string_view name) {
    return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
}

Residue random_residue(std::mt19937_64& rng, const PrimeContext& ctx) {
    // Plain modular reduction keeps the stream identical across standard libraries.
    return Residue::canonical(rng() % ctx.modulus(), ctx.modulus());
}

std::string joined_params(const CheckRecord& r, char sep) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += sep;
        out += k + "=" + v;
    }
    return out;
}

std::string status_word(const CheckRecord& r) {
    if (r.informational()) return r.ok ? "info-ok" : "info-FAIL";
    return r.ok ? "ok" : "FAIL";
}

}  // namespace

const std::vector<std::string>& scan_check_names() {
    static const std::vector<std::string> names{"theorem", "symmetry", "rv",    "tail",
                                                "remark_i", "fib",     "lucas", "sun",
                                                "gauss",    "key",     "product"};
    return names;
}

void ScanConfig::validate() const {
    if (min_p < 3) throw InvalidArgument("--min must be at least 3");
    if (max_p < min_p) {
        throw InvalidArgument("--max (" + std::to_string(max_p) + ") is below --min (" +
                              std::to_string(min_p) + ")");
    }
    if (max_p >= (std::uint64_t{1} << 32)) throw InvalidArgument("--max must be below 2^32");
    if (checks.empty()) throw InvalidArgument("no checks selected");
    for (const auto& c : checks) {
        const auto& all = scan_check_names();
        if (std::find(all.begin(), all.end(), c) == all.end()) {
            throw InvalidArgument("unknown check '" + c + "'");
        }
    }
    if (jobs < 1) throw InvalidArgument("--jobs must be at least 1");
}

std::uint64_t prime_seed(std::uint64_t global_seed, std::uint64_t p, std::uint64_t salt) {
    return splitmix64(splitmix64(global_seed) ^ splitmix64(p) ^ splitmix64(salt << 32));
}

std::vector<std::pair<Residue, Residue>> theorem_pairs(const PrimeContext& ctx, unsigned trials,
                                                       std::uint64_t seed) {
    const Residue half = from_rational(1, 2, ctx);
    std::vector<std::pair<Residue, Residue>> pairs{
        {ctx.zero(), ctx.residue(-1)}, {ctx.one(), ctx.zero()}, {half, -half}};
    std::mt19937_64 rng(prime_seed(seed, ctx.p(), kPairSalt));
    for (unsigned i = 0; i < trials; ++i) {
        const Residue a = random_residue(rng, ctx);
        const Residue b = random_residue(rng, ctx);
        pairs.emplace_back(a, b);
    }
    return pairs;
}

std::vector<Residue> remark_parameters(const PrimeContext& ctx, unsigned trials, std::uint64_t seed) {
    std::vector<Residue> ts{ctx.zero(), ctx.one(), ctx.residue(2), from_rational(1, 2, ctx)};
    std::mt19937_64 rng(prime_seed(seed, ctx.p(), kRemarkSalt));
    for (unsigned i = 0; i < trials; ++i) ts.push_back(random_residue(rng, ctx));
    return ts;
}

std::vector<CheckRecord> records_for_prime(const PrimeContext& ctx, const ScanConfig& config) {
    std::vector<CheckRecord> out;
    const bool one_mod_four = ctx.p() % 4 == 1;
    std::vector<std::pair<Residue, Residue>> pairs;
    if (selected(config, "theorem") || selected(config, "symmetry")) {
        pairs = theorem_pairs(ctx, config.trials, config.seed);
    }
    for (const auto& name : scan_check_names()) {
        if (!selected(config, name)) continue;
        if (name == "theorem") {
            for (const auto& [a, b] : pairs) out.push_back(check_theorem(ctx, a, b));
        } else if (name == "symmetry") {
            for (const auto& [a, b] : pairs) out.push_back(symmetry_check(ctx, a, b));
        } else if (name == "rv") {
            out.push_back(rv_check(ctx));
        } else if (name == "tail") {
            out.push_back(tail_vanishing_check(ctx));
        } else if (name == "remark_i") {
            for (const Residue t : remark_parameters(ctx, config.trials, config.seed)) {
                out.push_back(remark_i_check(ctx, t));
            }
        } else if (name == "fib") {
            if (one_mod_four) out.push_back(fib_check(ctx));
        } else if (name == "lucas") {
            if (!one_mod_four) out.push_back(lucas_check(ctx));
        } else if (name == "sun") {
            out.push_back(sun_check(ctx));
        } else if (name == "gauss") {
            if (one_mod_four) out.push_back(gauss_binomial_check(ctx));
        } else if (name == "key") {
            out.push_back(key_congruence_check(ctx));
        } else if (name == "product") {
            out.push_back(product_formula_record(ctx));
        }
    }
    return out;
}

bool counts_as_failure(const CheckRecord& record, bool strict) {
    return !record.ok && (strict || !record.informational());
}

int exit_status(const std::vector<CheckRecord>& records, bool strict) {
    return std::any_of(records.begin(), records.end(),
                       [&](const CheckRecord& r) { return counts_as_failure(r, strict); })
               ? 1
               : 0;
}

std::vector<CheckRecord> run_scan(const ScanConfig& config) {
    config.validate();
    const std::vector<std::uint64_t> primes = primes_in_range(std::max<std::uint64_t>(config.min_p, 3),
                                                              config.max_p);
    std::vector<std::vector<CheckRecord>> per_prime(primes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        while (!stop.load(std::memory_order_acquire)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            per_prime[i] = records_for_prime(PrimeContext(primes[i]), config);
            if (config.fail_fast && exit_status(per_prime[i], config.strict) != 0) {
                stop.store(true, std::memory_order_release);
            }
        }
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(primes.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    // Merge in prime order. Under fail_fast every prime below the first failing
    // one was issued before it and has been drained, so truncating there is
    // independent of scheduling.
    std::vector<CheckRecord> out;
    for (auto& records : per_prime) {
        const bool failed = exit_status(records, config.strict) != 0;
        out.insert(out.end(), std::make_move_iterator(records.begin()),
                   std::make_move_iterator(records.end()));
        if (config.fail_fast && failed) break;
    }
    return out;
}

ReportFormat parse_format(std::string_view name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string url_encode(std::string_view text) {
    std::string out;
    for (const unsigned char c : text) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

std::string format_report(const std::vector<CheckRecord>& records, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::json:
            for (const auto& r : records) {
                ordered_json params = ordered_json::object();
                for (const auto& [k, v] : r.params) params[k] = v;
                ordered_json j;
                j["p"] = r.p;
                j["check"] = r.check;
                j["params"] = std::move(params);
                j["lhs"] = r.lhs;
                j["rhs"] = r.rhs;
                j["ok"] = r.ok;
                os << j.dump() << '\n';
            }
            break;
        case ReportFormat::csv:
            os << "p,check,params,lhs,rhs,ok\n";
            for (const auto& r : records) {
                std::string params;
                for (const auto& [k, v] : r.params) {
                    if (!params.empty()) params += '&';
                    params += url_encode(k) + "=" + url_encode(v);
                }
                os << r.p << ',' << r.check << ',' << params << ',' << r.lhs << ',' << r.rhs << ','
                   << (r.ok ? "true" : "false") << '\n';
            }
            break;
        case ReportFormat::text: {
            std::vector<std::vector<std::string>> rows{{"p", "check", "params", "lhs", "rhs", "status"}};
            for (const auto& r : records) {
                rows.push_back({std::to_string(r.p), r.check, joined_params(r, ','), r.lhs, r.rhs,
                                status_word(r)});
            }
            std::vector<std::size_t> width(rows.front().size(), 0);
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
            }
            for (const auto& row : rows) {
                for (std::size_t c = 0; c + 1 < row.size(); ++c) {
                    os << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
                }
                os << row.back() << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::vector<CheckRecord> parse_json_report(std::string_view text) {
    std::vector<CheckRecord> out;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const ordered_json j = ordered_json::parse(line);
        CheckRecord r;
        r.p = j.at("p").get<std::uint64_t>();
        r.check = j.at("check").get<std::string>();
        for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.ok = j.at("ok").get<bool>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace supercong
