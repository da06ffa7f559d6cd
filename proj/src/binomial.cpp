#include "supercong/binomial.hpp"

#include <string>
#include <utility>

namespace supercong {

namespace {

mpz_class to_mpz(std::uint64_t v) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_class(static_cast<unsigned long>(v));
}

}  // namespace

std::string_view to_string(StreamKind kind) {
    switch (kind) {
        case StreamKind::central:
            return "central";
        case StreamKind::half:
            return "half";
        case StreamKind::middle:
            return "middle";
    }
    return "?";
}

BinomialStream::BinomialStream(const PrimeContext& ctx, StreamKind kind)
    : ctx_(ctx), kind_(kind), last_(kind == StreamKind::central ? ctx.p() - 1 : ctx.n()) {}

const ValuatedResidue& BinomialStream::next() {
    if (exhausted()) {
        throw RangeExhausted(std::string(to_string(kind_)) + " stream exhausted at k = " +
                             std::to_string(k_));
    }
    const auto k = static_cast<std::int64_t>(k_);
    const auto n = static_cast<std::int64_t>(ctx_.n());
    switch (kind_) {
        case StreamKind::central:
            current_ = valres_mul_rational(current_, 2 * (2 * k + 1), k + 1, ctx_);
            break;
        case StreamKind::half:
            current_ = valres_mul_rational(current_, n - k, k + 1, ctx_);
            break;
        case StreamKind::middle:
            // Two factors: the combined products overflow int64 once p > 2^31.
            current_ = valres_mul_rational(current_, n + k + 1, 2 * k + 1, ctx_);
            current_ = valres_mul_rational(current_, n - k, 2 * k + 2, ctx_);
            break;
    }
    ++k_;
    return current_;
}

mpz_class exact_binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    auto kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    mpz_class r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        r *= to_mpz(n - kk + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

std::vector<mpz_class> binomial_row(std::uint64_t n) {
    std::vector<mpz_class> row;
    row.reserve(n + 1);
    row.emplace_back(1);
    for (std::uint64_t k = 0; k < n; ++k) {
        mpz_class next = row.back() * to_mpz(n - k);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k + 1);
        row.push_back(std::move(next));
    }
    return row;
}

unsigned padic_valuation(const mpz_class& value, std::uint64_t p) {
    if (value == 0) return 0;
    mpz_class rest = value;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
    }
    return e;
}

mpz_class odd_square_product(std::uint64_t p, std::uint64_t k) {
    const mpz_class p2 = to_mpz(p) * to_mpz(p);
    mpz_class r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        const mpz_class odd = to_mpz(2 * j - 1);
        r *= p2 - odd * odd;
    }
    return r;
}

bool product_formula_check(std::uint64_t p, std::uint64_t k) {
    mpz_class denom;
    mpz_fac_ui(denom.get_mpz_t(), 2 * k);
    denom <<= 2 * k;  // 4^k
    const mpz_class numer = odd_square_product(p, k);
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) return false;
    return numer / denom == exact_binomial((p - 1) / 2 + k, static_cast<std::int64_t>(2 * k));
}

bool trinomial_revision_check(std::uint64_t n, std::uint64_t k) {
    const auto kk = static_cast<std::int64_t>(k);
    return exact_binomial(n, kk) * exact_binomial(n + k, kk) ==
           exact_binomial(n + k, 2 * kk) * exact_binomial(2 * k, kk);
}

}  // namespace supercong
