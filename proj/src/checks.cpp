#include "supercong/checks.hpp"

#include <algorithm>
#include <string>

#include "supercong/binomial.hpp"
#include "supercong/primes.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

bool CheckRecord::informational() const { return param(kInformationalKey) == kInformationalValue; }

std::string CheckRecord::param(std::string_view key) const {
    const auto it = std::find_if(params.begin(), params.end(),
                                 [&](const auto& kv) { return kv.first == key; });
    return it == params.end() ? std::string() : it->second;
}

namespace {

CheckRecord make_record(const PrimeContext& ctx, std::string check, Residue lhs, Residue rhs) {
    CheckRecord r;
    r.p = ctx.p();
    r.check = std::move(check);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.ok = lhs == rhs;
    return r;
}

// sum_{k=0}^{upper} C(2k,k)^2 w_k ratio^k where weight(k) supplies w_k.
template <typename Weight>
Residue weighted_central_sum(const PrimeContext& ctx, Residue ratio, std::uint64_t upper,
                             Weight&& weight) {
    BinomialStream central(ctx, StreamKind::central);
    Residue total = ctx.zero();
    Residue ratio_pow = ctx.one();
    for (std::uint64_t k = 0; k <= upper; ++k) {
        if (k > 0) central.next();
        const Residue c = central.value();
        total += c * c * ratio_pow * weight(k);
        ratio_pow *= ratio;
    }
    return total;
}

// sum_{k=0}^{n} w_k a^(n-k) b^k by Horner in a; w_k supplied in order by next_weight().
template <typename NextWeight>
Residue homogeneous_sum(const PrimeContext& ctx, Residue a, Residue b, NextWeight&& next_weight) {
    Residue total = ctx.zero();
    Residue b_pow = ctx.one();
    for (std::uint64_t k = 0; k <= ctx.n(); ++k) {
        total = total * a + next_weight(k) * b_pow;
        b_pow *= b;
    }
    return total;
}

Residue two_x_minus_p_over_two_x(const PrimeContext& ctx, std::int64_t x) {
    const Residue two_x = ctx.residue(2 * x);
    const Residue inv_two_x = mod_inverse(static_cast<std::int64_t>(two_x.value()), ctx.modulus());
    return two_x - ctx.residue(static_cast<std::int64_t>(ctx.p())) * inv_two_x;
}

void require_class(const PrimeContext& ctx, std::uint64_t cls, const char* who) {
    if (ctx.p() % 4 != cls) {
        throw WrongResidueClass(std::string(who) + " requires p = " + std::to_string(cls) +
                                " (mod 4), got p = " + std::to_string(ctx.p()));
    }
}

}  // namespace

Residue theorem_lhs(const PrimeContext& ctx, Residue alpha, Residue beta) {
    BinomialStream central(ctx, StreamKind::central);
    Residue inv16_pow = ctx.one();
    return homogeneous_sum(ctx, alpha - beta, -beta, [&](std::uint64_t k) {
        if (k > 0) {
            central.next();
            inv16_pow *= ctx.inv16();
        }
        const Residue c = central.value();
        return c * c * inv16_pow;
    });
}

Residue theorem_rhs(const PrimeContext& ctx, Residue alpha, Residue beta) {
    BinomialStream half(ctx, StreamKind::half);
    return homogeneous_sum(ctx, alpha, beta, [&](std::uint64_t k) {
        if (k > 0) half.next();
        const Residue c = half.value();
        return c * c;
    });
}

Residue central_square_sum(const PrimeContext& ctx, Residue ratio) {
    return weighted_central_sum(ctx, ratio, ctx.p() - 1, [&](std::uint64_t) { return ctx.one(); });
}

Residue fibonacci_sum(const PrimeContext& ctx) {
    FibLucasStream fib(ctx.modulus());
    return weighted_central_sum(ctx, ctx.inv16(), ctx.p() - 1, [&](std::uint64_t k) {
        if (k > 0) fib.next();
        return Residue::canonical(fib.current().f, ctx.modulus());
    });
}

Residue lucas_sum(const PrimeContext& ctx) {
    FibLucasStream fib(ctx.modulus());
    return weighted_central_sum(ctx, ctx.inv16(), ctx.p() - 1, [&](std::uint64_t k) {
        if (k > 0) fib.next();
        return Residue::canonical(fib.current().l, ctx.modulus());
    });
}

CheckRecord check_theorem(const PrimeContext& ctx, Residue alpha, Residue beta) {
    CheckRecord r = make_record(ctx, "theorem", theorem_lhs(ctx, alpha, beta),
                                theorem_rhs(ctx, alpha, beta));
    r.params = {{"alpha", alpha.str()}, {"beta", beta.str()}};
    return r;
}

CheckRecord symmetry_check(const PrimeContext& ctx, Residue alpha, Residue beta) {
    const Residue direct = theorem_lhs(ctx, alpha, beta);
    const Residue swapped = theorem_lhs(ctx, beta, alpha);
    const Residue negated = ctx.sign_n() * theorem_lhs(ctx, -alpha, -beta);
    // rhs is whichever companion disagrees with lhs, so ok <=> lhs == rhs holds.
    const Residue rhs = swapped != direct ? swapped : negated;
    CheckRecord r = make_record(ctx, "symmetry", direct, rhs);
    r.params = {{"alpha", alpha.str()},
                {"beta", beta.str()},
                {"swapped", swapped.str()},
                {"negated", negated.str()}};
    return r;
}

CheckRecord rv_check(const PrimeContext& ctx) {
    return make_record(ctx, "rv", central_square_sum(ctx, ctx.inv16()), ctx.sign_n());
}

CheckRecord tail_vanishing_check(const PrimeContext& ctx) {
    BinomialStream central(ctx, StreamKind::central);
    while (central.k() < ctx.n() + 1) central.next();

    Residue first_nonzero = ctx.zero();
    std::uint64_t bad_k = 0;
    for (; central.k() < ctx.p() - 1; central.next()) {
        const Residue sq = collapse(valres_mul(central.current(), central.current(), ctx), ctx);
        if (!sq.is_zero() && bad_k == 0) {
            first_nonzero = sq;
            bad_k = central.k();
        }
    }
    const Residue top = collapse(valres_mul(central.current(), central.current(), ctx), ctx);

    CheckRecord r = make_record(ctx, "tail", first_nonzero, ctx.zero());
    r.params = {{"top_k", std::to_string(central.k())},
                {"top_vanishes", top.is_zero() ? "true" : "false"}};
    if (bad_k != 0) r.params.emplace_back("first_bad_k", std::to_string(bad_k));
    return r;
}

CheckRecord remark_i_check(const PrimeContext& ctx, Residue t) {
    const Residue lhs = central_square_sum(ctx, t * ctx.inv16());
    const Residue rhs = ctx.sign_n() * central_square_sum(ctx, (ctx.one() - t) * ctx.inv16());
    CheckRecord r = make_record(ctx, "remark_i", lhs, rhs);
    r.params = {{"t", t.str()}};
    return r;
}

CheckRecord fib_check(const PrimeContext& ctx) {
    require_class(ctx, 1, "fib_check");
    CheckRecord r = make_record(ctx, "fib", fibonacci_sum(ctx), ctx.zero());
    if (ctx.p() == 5) r.params.emplace_back(kInformationalKey, kInformationalValue);
    return r;
}

CheckRecord lucas_check(const PrimeContext& ctx) {
    require_class(ctx, 3, "lucas_check");
    return make_record(ctx, "lucas", lucas_sum(ctx), ctx.zero());
}

CheckRecord sun_check(const PrimeContext& ctx) {
    const Residue lhs = central_square_sum(ctx, ctx.inv32());
    if (ctx.p() % 4 == 3) return make_record(ctx, "sun", lhs, ctx.zero());

    const QuadraticPartition part = cornacchia(ctx.p());
    CheckRecord r = make_record(ctx, "sun", lhs, two_x_minus_p_over_two_x(ctx, part.x));
    r.params = {{"x", std::to_string(part.x)}, {"y", std::to_string(part.y)}};
    return r;
}

CheckRecord gauss_binomial_check(const PrimeContext& ctx) {
    require_class(ctx, 1, "gauss_binomial_check");
    const std::uint64_t f = (ctx.p() - 1) / 4;
    const QuadraticPartition part = cornacchia(ctx.p());

    const std::vector<mpz_class> row = binomial_row(2 * f);
    mpz_class alternating = 0;
    for (std::uint64_t k = 0; k < row.size(); ++k) {
        if (k % 2 == 0) alternating += row[k] * row[k];
        else alternating -= row[k] * row[k];
    }
    mpz_class signed_central = row[f];
    if (f % 2 == 1) signed_central = -signed_central;
    const bool exact = alternating == signed_central;

    CheckRecord r;
    if (exact) {
        const Residue central_res = Residue::canonical(
            mpz_fdiv_ui(row[f].get_mpz_t(), ctx.modulus()), ctx.modulus());
        const Residue scale = pow_mod(mod_inverse(-4, ctx.modulus()), f);
        r = make_record(ctx, "gauss", scale * central_res, two_x_minus_p_over_two_x(ctx, part.x));
    } else {
        // The exact integers disagree; report them so that lhs != rhs.
        r.p = ctx.p();
        r.check = "gauss";
        r.lhs = alternating.get_str();
        r.rhs = signed_central.get_str();
        r.ok = false;
    }
    r.params = {{"f", std::to_string(f)},
                {"x", std::to_string(part.x)},
                {"exact_identity", exact ? "true" : "false"}};
    return r;
}

CheckRecord key_congruence_check(const PrimeContext& ctx) {
    BinomialStream middle(ctx, StreamKind::middle);
    BinomialStream central(ctx, StreamKind::central);
    const Residue inv_neg16 = mod_inverse(static_cast<std::int64_t>(ctx.residue(-16).value()),
                                          ctx.modulus());
    Residue scale = ctx.one();
    Residue lhs = ctx.one();
    Residue rhs = ctx.one();
    std::uint64_t k = 0;
    for (;; ++k) {
        if (k > 0) {
            middle.next();
            central.next();
            scale *= inv_neg16;
        }
        lhs = middle.value();
        rhs = central.value() * scale;
        if (lhs != rhs || k == ctx.n()) break;
    }
    CheckRecord r = make_record(ctx, "key", lhs, rhs);
    r.params = {{"k", std::to_string(k)}};
    return r;
}

CheckRecord product_formula_record(const PrimeContext& ctx) {
    std::uint64_t passing = 0;
    for (std::uint64_t k = 0; k <= ctx.n(); ++k) passing += product_formula_check(ctx.p(), k) ? 1 : 0;
    CheckRecord r;
    r.p = ctx.p();
    r.check = "product";
    r.lhs = std::to_string(passing);
    r.rhs = std::to_string(ctx.n() + 1);
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace supercong
