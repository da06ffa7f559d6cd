// Python bindings for the supercong library.

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supercong/binomial.hpp"
#include "supercong/checks.hpp"
#include "supercong/cli.hpp"
#include "supercong/identity.hpp"
#include "supercong/oracle.hpp"
#include "supercong/primes.hpp"
#include "supercong/residue.hpp"
#include "supercong/scan.hpp"
#include "supercong/sequences.hpp"

namespace py = pybind11;
namespace sc = supercong;

namespace {

py::int_ to_py(const mpz_class& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::int_& value) { return mpz_class(py::str(value).cast<std::string>(), 10); }

// Accepts int, str ("3", "1/2") for a p-adic parameter.
sc::Residue padic(const py::object& value, const sc::PrimeContext& ctx) {
    return sc::parse_padic(py::str(value).cast<std::string>(), ctx);
}

sc::StreamKind stream_kind(const std::string& name) {
    if (name == "central") return sc::StreamKind::central;
    if (name == "half") return sc::StreamKind::half;
    if (name == "middle") return sc::StreamKind::middle;
    throw py::value_error("stream kind must be central, half or middle");
}

}  // namespace

PYBIND11_MODULE(_supercong, m) {
    m.doc() = "Supercongruence verification toolkit: arithmetic mod p^2, exact oracles, prime scans";

    auto base = py::register_exception<sc::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<sc::NotInvertible>(m, "NotInvertible", base.ptr());
    py::register_exception<sc::NegativeValuation>(m, "NegativeValuation", base.ptr());
    py::register_exception<sc::BadResidueClass>(m, "BadResidueClass", base.ptr());
    py::register_exception<sc::WrongResidueClass>(m, "WrongResidueClass", base.ptr());
    py::register_exception<sc::RangeExhausted>(m, "RangeExhausted", base.ptr());
    py::register_exception<sc::UnknownKind>(m, "UnknownKind", base.ptr());
    py::register_exception<sc::InvalidArgument>(m, "InvalidArgument", base.ptr());

    // residue-core
    m.def("mod_inverse", [](std::int64_t a, std::uint64_t mod) { return sc::mod_inverse(a, mod).value(); },
          py::arg("a"), py::arg("m"));
    m.def("pow_mod",
          [](std::int64_t a, std::uint64_t e, std::uint64_t mod) {
              return sc::pow_mod(sc::Residue(a, mod), e).value();
          },
          py::arg("a"), py::arg("e"), py::arg("m"));
    m.def("from_rational",
          [](std::int64_t num, std::int64_t den, std::uint64_t p) {
              return sc::from_rational(num, den, sc::PrimeContext(p)).value();
          },
          py::arg("num"), py::arg("den"), py::arg("p"));
    m.def("padic_residue",
          [](const py::object& value, std::uint64_t p) { return padic(value, sc::PrimeContext(p)).value(); },
          py::arg("value"), py::arg("p"), "Reduce an integer or 'a/b' string mod p^2.");

    // primes-and-partitions
    py::class_<sc::QuadraticPartition>(m, "QuadraticPartition")
        .def_readonly("p", &sc::QuadraticPartition::p)
        .def_readonly("x", &sc::QuadraticPartition::x)
        .def_readonly("y", &sc::QuadraticPartition::y)
        .def("__repr__", [](const sc::QuadraticPartition& q) {
            std::ostringstream os;
            os << "QuadraticPartition(p=" << q.p << ", x=" << q.x << ", y=" << q.y << ")";
            return os.str();
        });
    m.def("primes_in_range", &sc::primes_in_range, py::arg("lo"), py::arg("hi"));
    m.def("sqrt_minus_one", &sc::sqrt_minus_one, py::arg("p"));
    m.def("cornacchia", &sc::cornacchia, py::arg("p"));

    // binomial-engine
    m.def("exact_binomial", [](std::uint64_t n, std::int64_t k) { return to_py(sc::exact_binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("binomial_stream",
          [](std::uint64_t p, const std::string& kind) {
              const sc::PrimeContext ctx(p);
              sc::BinomialStream s(ctx, stream_kind(kind));
              std::vector<std::pair<std::uint64_t, int>> out{{s.value().value(), s.current().val()}};
              while (!s.exhausted()) {
                  s.next();
                  out.emplace_back(s.value().value(), s.current().val());
              }
              return out;
          },
          py::arg("p"), py::arg("kind"), "List of (residue mod p^2, saturated valuation) for every k.");
    m.def("odd_square_product",
          [](std::uint64_t p, std::uint64_t k) { return to_py(sc::odd_square_product(p, k)); }, py::arg("p"),
          py::arg("k"));
    m.def("product_formula_check", &sc::product_formula_check, py::arg("p"), py::arg("k"));
    m.def("trinomial_revision_check", &sc::trinomial_revision_check, py::arg("n"), py::arg("k"));

    // sequences
    m.def("fib_lucas",
          [](std::uint64_t k, std::uint64_t mod) {
              const sc::FibPair f = sc::fib_lucas(k, mod);
              return py::make_tuple(f.f, f.l);
          },
          py::arg("k"), py::arg("m"));

    // identity-lab
    m.def("gould_lhs", [](unsigned n, const py::int_& a, const py::int_& b) {
        return to_py(sc::gould_lhs(n, to_mpz(a), to_mpz(b)));
    });
    m.def("gould_rhs", [](unsigned n, const py::int_& a, const py::int_& b) {
        return to_py(sc::gould_rhs(n, to_mpz(a), to_mpz(b)));
    });
    m.def("gould_polynomial_check", &sc::gould_polynomial_check, py::arg("n"));
    m.def("gf_coefficient_check", [](unsigned n, const py::int_& a, const py::int_& b) {
        return sc::gf_coefficient_check(n, to_mpz(a), to_mpz(b));
    });
    m.def("alternating_identity_check", &sc::alternating_identity_check, py::arg("f"));

    // supercongruence
    py::class_<sc::CheckRecord>(m, "CheckRecord")
        .def_readonly("p", &sc::CheckRecord::p)
        .def_readonly("check", &sc::CheckRecord::check)
        .def_property_readonly("params",
                               [](const sc::CheckRecord& r) {
                                   py::dict d;
                                   for (const auto& [k, v] : r.params) d[py::str(k)] = v;
                                   return d;
                               })
        .def_readonly("lhs", &sc::CheckRecord::lhs)
        .def_readonly("rhs", &sc::CheckRecord::rhs)
        .def_readonly("ok", &sc::CheckRecord::ok)
        .def_property_readonly("informational", &sc::CheckRecord::informational)
        .def("__repr__", [](const sc::CheckRecord& r) {
            return sc::format_report({r}, sc::ReportFormat::json);
        });

    const auto with_ctx = [&m](const char* name, sc::CheckRecord (*fn)(const sc::PrimeContext&)) {
        m.def(name, [fn](std::uint64_t p) { return fn(sc::PrimeContext(p)); }, py::arg("p"));
    };
    with_ctx("rv_check", &sc::rv_check);
    with_ctx("tail_vanishing_check", &sc::tail_vanishing_check);
    with_ctx("fib_check", &sc::fib_check);
    with_ctx("lucas_check", &sc::lucas_check);
    with_ctx("sun_check", &sc::sun_check);
    with_ctx("gauss_binomial_check", &sc::gauss_binomial_check);
    with_ctx("key_congruence_check", &sc::key_congruence_check);

    m.def("check_theorem",
          [](std::uint64_t p, const py::object& alpha, const py::object& beta) {
              const sc::PrimeContext ctx(p);
              return sc::check_theorem(ctx, padic(alpha, ctx), padic(beta, ctx));
          },
          py::arg("p"), py::arg("alpha"), py::arg("beta"));
    m.def("symmetry_check",
          [](std::uint64_t p, const py::object& alpha, const py::object& beta) {
              const sc::PrimeContext ctx(p);
              return sc::symmetry_check(ctx, padic(alpha, ctx), padic(beta, ctx));
          },
          py::arg("p"), py::arg("alpha"), py::arg("beta"));
    m.def("remark_i_check",
          [](std::uint64_t p, const py::object& t) {
              const sc::PrimeContext ctx(p);
              return sc::remark_i_check(ctx, padic(t, ctx));
          },
          py::arg("p"), py::arg("t"));
    m.def("oracle_sum",
          [](const std::string& kind, std::uint64_t p, const py::object& alpha, const py::object& beta,
             const py::object& t) {
              sc::OracleParams params;
              params.alpha = sc::parse_rational(py::str(alpha).cast<std::string>());
              params.beta = sc::parse_rational(py::str(beta).cast<std::string>());
              params.t = sc::parse_rational(py::str(t).cast<std::string>());
              const sc::OracleSum s = sc::oracle_sum(kind, p, params);
              return py::make_tuple(to_py(s.value), to_py(s.scale), s.reduce(sc::PrimeContext(p)).value());
          },
          py::arg("kind"), py::arg("p"), py::arg("alpha") = 0, py::arg("beta") = 0, py::arg("t") = 0,
          "Exact (value, scale, residue) of a named sum; residue = value / scale mod p^2.");

    // cli-harness
    m.def("run_scan",
          [](std::uint64_t min_p, std::uint64_t max_p, std::optional<std::vector<std::string>> checks,
             unsigned trials, std::uint64_t seed, unsigned jobs, bool fail_fast, bool strict) {
              sc::ScanConfig config;
              config.min_p = min_p;
              config.max_p = max_p;
              if (checks) config.checks = *checks;
              config.trials = trials;
              config.seed = seed;
              config.jobs = jobs;
              config.fail_fast = fail_fast;
              config.strict = strict;
              py::gil_scoped_release release;
              return sc::run_scan(config);
          },
          py::arg("min_p"), py::arg("max_p"), py::arg("checks") = py::none(), py::arg("trials") = 8,
          py::arg("seed") = 0, py::arg("jobs") = 1, py::arg("fail_fast") = false, py::arg("strict") = false);
    m.def("format_report",
          [](const std::vector<sc::CheckRecord>& records, const std::string& format) {
              return sc::format_report(records, sc::parse_format(format));
          },
          py::arg("records"), py::arg("format") = "text");
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int status = sc::run_cli(args, out, err);
              return py::make_tuple(status, out.str(), err.str());
          },
          py::arg("args"), "Run the command-line front end in-process; returns (status, stdout, stderr).");
}
