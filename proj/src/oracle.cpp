#include "supercong/oracle.hpp"

#include <stdexcept>
#include <string>

#include "supercong/binomial.hpp"

namespace supercong {

namespace {

std::vector<mpz_class> central_squares(std::uint64_t upper) {
    std::vector<mpz_class> out;
    out.reserve(upper + 1);
    mpz_class c = 1;
    for (std::uint64_t k = 0; k <= upper; ++k) {
        if (k > 0) {
            c *= 2 * (2 * k - 1);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        }
        out.push_back(c * c);
    }
    return out;
}

// Exact F_k (lucas = false) or L_k (lucas = true) for k = 0..upper.
std::vector<mpz_class> fibonacci_like(std::uint64_t upper, bool lucas) {
    std::vector<mpz_class> out;
    mpz_class a = lucas ? 2 : 0;
    mpz_class b = 1;
    for (std::uint64_t k = 0; k <= upper; ++k) {
        out.push_back(a);
        mpz_class next = a + b;
        a = b;
        b = next;
    }
    return out;
}

std::vector<mpz_class> times(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
}

mpz_class pow(const mpz_class& base, std::uint64_t e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

Residue OracleSum::reduce(const PrimeContext& ctx) const {
    const std::uint64_t m = ctx.modulus();
    const std::uint64_t s = mpz_fdiv_ui(scale.get_mpz_t(), m);
    const Residue v = Residue::canonical(mpz_fdiv_ui(value.get_mpz_t(), m), m);
    return v * mod_inverse(static_cast<std::int64_t>(s), m);
}

const std::vector<std::string>& oracle_kinds() {
    static const std::vector<std::string> kinds{"rv",           "theorem_lhs", "theorem_rhs",
                                                "remark_i_lhs", "remark_i_rhs", "fib",
                                                "lucas",        "sun",          "gauss"};
    return kinds;
}

OracleSum cleared_sum(const std::vector<mpz_class>& weights, const mpq_class& x, const mpq_class& y) {
    if (weights.empty()) return {0, 1};
    const std::uint64_t top = weights.size() - 1;
    const mpz_class& xn = x.get_num();
    const mpz_class& xd = x.get_den();
    const mpz_class& yn = y.get_num();
    const mpz_class& yd = y.get_den();

    // term k: w_k (xn yd)^(K-k) (yn xd)^k, scale (xd yd)^K
    const mpz_class left = xn * yd;
    const mpz_class right = yn * xd;
    std::vector<mpz_class> left_pows{1};
    for (std::uint64_t i = 1; i <= top; ++i) left_pows.push_back(left_pows.back() * left);

    OracleSum out;
    mpz_class right_pow = 1;
    for (std::uint64_t k = 0; k <= top; ++k) {
        out.value += weights[k] * left_pows[top - k] * right_pow;
        right_pow *= right;
    }
    out.scale = pow(xd * yd, top);
    return out;
}

OracleSum oracle_sum(std::string_view kind, std::uint64_t p, const OracleParams& params) {
    if (p < 3 || p % 2 == 0) throw InvalidArgument("oracle_sum: p must be an odd prime");
    const std::uint64_t n = (p - 1) / 2;
    const mpq_class one = 1;
    const mpq_class inv16(1, 16);

    if (kind == "rv") return cleared_sum(central_squares(p - 1), one, inv16);
    if (kind == "theorem_lhs") {
        return cleared_sum(central_squares(n), params.alpha - params.beta, -params.beta * inv16);
    }
    if (kind == "theorem_rhs") {
        std::vector<mpz_class> w = binomial_row(n);
        return cleared_sum(times(w, w), params.alpha, params.beta);
    }
    if (kind == "remark_i_lhs") return cleared_sum(central_squares(p - 1), one, params.t * inv16);
    if (kind == "remark_i_rhs") {
        OracleSum s = cleared_sum(central_squares(p - 1), one, (one - params.t) * inv16);
        if (n % 2 == 1) s.value = -s.value;
        return s;
    }
    if (kind == "fib") {
        return cleared_sum(times(central_squares(p - 1), fibonacci_like(p - 1, false)), one, inv16);
    }
    if (kind == "lucas") {
        return cleared_sum(times(central_squares(p - 1), fibonacci_like(p - 1, true)), one, inv16);
    }
    if (kind == "sun") return cleared_sum(central_squares(p - 1), one, mpq_class(1, 32));
    if (kind == "gauss") {
        // (-4)^-f C(2f,f); meaningful for p = 1 (mod 4).
        const std::uint64_t f = (p - 1) / 4;
        return {exact_binomial(2 * f, static_cast<std::int64_t>(f)), pow(mpz_class(-4), f)};
    }
    throw UnknownKind("oracle_sum: unknown kind '" + std::string(kind) + "'");
}

mpq_class parse_rational(std::string_view text) {
    mpq_class q;
    try {
        q = mpq_class(std::string(text), 10);
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("not an integer or rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

}  // namespace supercong
