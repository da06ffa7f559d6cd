#include "doctest.h"

#include <sstream>

#include "supercong/cli.hpp"
#include "supercong/oracle.hpp"

using namespace supercong;

namespace {

Command parse(std::initializer_list<const char*> words) {
    std::vector<std::string> args(words.begin(), words.end());
    return parse_args(args);
}

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(std::initializer_list<const char*> words) {
    std::vector<std::string> args(words.begin(), words.end());
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

ScanConfig scan_config(std::uint64_t lo, std::uint64_t hi, std::vector<std::string> checks) {
    ScanConfig c;
    c.min_p = lo;
    c.max_p = hi;
    c.checks = std::move(checks);
    return c;
}

}  // namespace

TEST_CASE("parse scan arguments") {
    const Command cmd = parse({"scan", "--min", "3", "--max", "97", "--check", "rv,sun", "--format", "json",
                               "--jobs", "4", "--seed", "9", "--strict"});
    const auto* scan = std::get_if<ScanConfig>(&cmd);
    REQUIRE(scan != nullptr);
    CHECK(scan->min_p == 3);
    CHECK(scan->max_p == 97);
    CHECK(scan->checks == std::vector<std::string>{"rv", "sun"});
    CHECK(scan->format == ReportFormat::json);
    CHECK(scan->jobs == 4);
    CHECK(scan->seed == 9);
    CHECK(scan->strict);
    CHECK_FALSE(scan->fail_fast);

    const auto repeated = std::get<ScanConfig>(parse({"scan", "--check", "rv", "--check", "tail"}));
    CHECK(repeated.checks == std::vector<std::string>{"rv", "tail"});

    CHECK_THROWS_AS(parse({"scan", "--check", "nope"}), UsageError);
    CHECK_THROWS_AS(parse({"scan", "--format", "xml"}), UsageError);
    CHECK_THROWS_AS(parse({"scan", "--min", "10", "--max", "5"}), UsageError);
    CHECK_THROWS_AS(parse({"scan", "--min", "2"}), UsageError);
    CHECK_THROWS_AS(parse({"frobnicate"}), UsageError);
    CHECK(std::holds_alternative<HelpRequest>(parse({"--help"})));
}

TEST_CASE("parse other subcommands") {
    const auto id = std::get<IdentityConfig>(parse({"identity", "--max-n", "12", "--check", "gould"}));
    CHECK(id.max_n == 12);
    CHECK(id.checks == std::vector<std::string>{"gould"});

    const auto oracle = std::get<OracleConfig>(parse({"oracle", "--p", "5", "--kind", "theorem_lhs", "--alpha",
                                                      "1/2", "--beta", "-1/2"}));
    CHECK(oracle.p == 5);
    CHECK(oracle.alpha == "1/2");
    CHECK(oracle.beta == "-1/2");
    CHECK_THROWS_AS(parse({"oracle", "--p", "5", "--kind", "bogus"}), UsageError);

    const auto part = std::get<PartitionConfig>(parse({"partition", "--p", "13"}));
    CHECK(part.min_p == 13);
    CHECK(part.max_p == 13);
    CHECK_THROWS_AS(parse({"partition", "--p", "15"}), UsageError);
}

TEST_CASE("scan examples") {
    const auto rv = run_scan(scan_config(3, 7, {"rv"}));
    REQUIRE(rv.size() == 3);
    CHECK(rv[0].p == 3);
    CHECK(rv[2].p == 7);
    CHECK(exit_status(rv, false) == 0);

    const auto sun = run_scan(scan_config(3, 5, {"sun"}));
    REQUIRE(sun.size() == 2);
    CHECK(sun[0].rhs == "0");
    CHECK(sun[1].rhs == "12");

    CHECK(run_scan(scan_config(24, 28, {"rv"})).empty());

    ScanConfig full = scan_config(3, 61, scan_check_names());
    const auto all = run_scan(full);
    CHECK(exit_status(all, false) == 0);
    CHECK(exit_status(all, true) == 0);
}

TEST_CASE("informational records and exit status") {
    CheckRecord info{5, "fib", {{std::string(kInformationalKey), std::string(kInformationalValue)}}, "1", "0", false};
    CHECK(info.informational());
    CHECK(exit_status({info}, false) == 0);
    CHECK(exit_status({info}, true) == 1);
    CheckRecord plain{7, "rv", {}, "1", "48", false};
    CHECK(exit_status({plain}, false) == 1);
}

TEST_CASE("fail fast truncates after the first failing prime") {
    // No check fails for real, so fail_fast must not change the report.
    ScanConfig c = scan_config(3, 101, {"rv", "key"});
    const auto plain = run_scan(c);
    c.fail_fast = true;
    c.jobs = 4;
    CHECK(run_scan(c) == plain);
}

TEST_CASE("reports are identical across job counts") {
    ScanConfig c = scan_config(3, 211, scan_check_names());
    c.seed = 42;
    c.jobs = 1;
    const std::string one = format_report(run_scan(c), ReportFormat::json);
    c.jobs = 8;
    CHECK(format_report(run_scan(c), ReportFormat::json) == one);
    c.seed = 43;
    CHECK(format_report(run_scan(c), ReportFormat::json) != one);
}

TEST_CASE("report formats") {
    const std::vector<CheckRecord> records{
        {13, "sun", {{"x", "-3"}, {"y", "2"}}, "137", "137", true},
        {5, "fib", {{"status", "informational"}}, "0", "0", true},
        {7, "rv", {{"odd key", "a&b=c"}}, "1", "48", false},
    };

    const std::string json = format_report(records, ReportFormat::json);
    CHECK(json.substr(0, json.find('\n')) ==
          R"({"p":13,"check":"sun","params":{"x":"-3","y":"2"},"lhs":"137","rhs":"137","ok":true})");
    CHECK(parse_json_report(json) == records);

    const std::string csv = format_report(records, ReportFormat::csv);
    CHECK(csv.rfind("p,check,params,lhs,rhs,ok\n", 0) == 0);
    CHECK(csv.find("13,sun,x=-3&y=2,137,137,true\n") != std::string::npos);
    CHECK(csv.find("7,rv,odd%20key=a%26b%3Dc,1,48,false\n") != std::string::npos);

    const std::string text = format_report(records, ReportFormat::text);
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    REQUIRE(all.size() == 4);
    CHECK(all[1].ends_with("  ok"));
    CHECK(all[2].ends_with("info-ok"));
    CHECK(all[3].ends_with("FAIL"));
    CHECK(all[0].find("status") != std::string::npos);

    CHECK(url_encode("a b/c") == "a%20b%2Fc");
}

TEST_CASE("identity runner") {
    IdentityConfig c;
    c.max_n = 6;
    c.points = 3;
    const auto records = run_identity(c);
    CHECK_FALSE(records.empty());
    for (const auto& r : records) {
        CHECK(r.p == 0);
        CHECK_FALSE(r.param("n").empty());
        CHECK(r.ok);
    }
}

TEST_CASE("run_cli end to end") {
    const CliResult rv = cli({"scan", "--max", "7", "--check", "rv", "--format", "csv"});
    CHECK(rv.status == 0);
    CHECK(rv.out == "p,check,params,lhs,rhs,ok\n3,rv,,8,8,true\n5,rv,,1,1,true\n7,rv,,48,48,true\n");

    const CliResult oracle = cli({"oracle", "--p", "3", "--kind", "rv"});
    CHECK(oracle.status == 0);
    CHECK(oracle.out.find("value: 356") != std::string::npos);
    CHECK(oracle.out.find("scale: 256") != std::string::npos);
    CHECK(oracle.out.find("residue: 8") != std::string::npos);

    CHECK(cli({"partition", "--min", "5", "--max", "13"}).out == "5 1 2\n13 -3 2\n");

    const CliResult bad = cli({"scan", "--max", "1"});
    CHECK(bad.status == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(cli({"oracle", "--p", "9", "--kind", "rv"}).status == 2);
    CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("oracle basics") {
    const OracleSum rv = oracle_sum("rv", 3);
    CHECK(rv.value == 356);
    CHECK(rv.scale == 256);
    CHECK(rv.reduce(PrimeContext(3)).value() == 8);
    const OracleSum empty = cleared_sum({}, 1, 1);
    CHECK(empty.value == 0);
    CHECK(empty.scale == 1);
    CHECK_THROWS_AS(oracle_sum("nope", 5), UnknownKind);
    CHECK(parse_rational("6/4") == mpq_class(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
}
