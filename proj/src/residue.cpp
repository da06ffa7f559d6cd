#include "supercong/residue.hpp"

#include <cassert>
#include <string>

#include <gmpxx.h>

namespace supercong {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

std::uint64_t reduce_signed(i128 value, std::uint64_t m) {
    i128 r = value % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t m) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(value.get_mpz_t(), m);
}

}  // namespace

Residue::Residue(std::int64_t value, std::uint64_t modulus)
    : value_(reduce_signed(value, modulus)), modulus_(modulus) {}

Residue Residue::operator+(Residue rhs) const {
    assert(modulus_ == rhs.modulus_);
    const std::uint64_t gap = modulus_ - rhs.value_;
    return canonical(value_ >= gap ? value_ - gap : value_ + rhs.value_, modulus_);
}

Residue Residue::operator-(Residue rhs) const {
    assert(modulus_ == rhs.modulus_);
    return canonical(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_),
                     modulus_);
}

Residue Residue::operator*(Residue rhs) const {
    assert(modulus_ == rhs.modulus_);
    return canonical(static_cast<std::uint64_t>(static_cast<u128>(value_) * rhs.value_ % modulus_),
                     modulus_);
}

Residue Residue::operator-() const {
    return canonical(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue mod_inverse(std::int64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidArgument("mod_inverse: modulus must be at least 2");
    i128 r0 = m, r1 = reduce_signed(a, m);
    i128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i128 q = r0 / r1;
        i128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) {
        throw NotInvertible("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
    }
    return Residue::canonical(reduce_signed(s0, m), m);
}

Residue pow_mod(Residue a, std::uint64_t e) {
    Residue result = Residue::canonical(1 % a.modulus(), a.modulus());
    while (e > 0) {
        if (e & 1) result *= a;
        a *= a;
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(p), m_(p * p), n_((p - 1) / 2) {
    if (p < 3 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
        throw InvalidArgument("PrimeContext: " + std::to_string(p) +
                              " is not an odd prime below 2^32");
    }
    inv16_ = mod_inverse(16, m_);
    inv32_ = mod_inverse(32, m_);
}

Residue from_rational(std::int64_t num, std::int64_t den, const PrimeContext& ctx) {
    if (den == 0) throw InvalidArgument("from_rational: zero denominator");
    if (den % static_cast<std::int64_t>(ctx.p()) == 0) {
        throw NotInvertible("from_rational: denominator " + std::to_string(den) +
                            " is divisible by p = " + std::to_string(ctx.p()));
    }
    return ctx.residue(num) * mod_inverse(den, ctx.modulus());
}

Residue parse_padic(std::string_view text, const PrimeContext& ctx) {
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    try {
        num = mpz_class(std::string(text.substr(0, slash)), 10);
        if (slash != std::string_view::npos) den = mpz_class(std::string(text.substr(slash + 1)), 10);
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("parse_padic: not an integer or rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw InvalidArgument("parse_padic: zero denominator in '" + std::string(text) + "'");
    const std::uint64_t m = ctx.modulus();
    const Residue d = Residue::canonical(reduce_mpz(den, m), m);
    if (d.value() % ctx.p() == 0) {
        throw NotInvertible("parse_padic: denominator of '" + std::string(text) +
                            "' is divisible by p = " + std::to_string(ctx.p()));
    }
    return Residue::canonical(reduce_mpz(num, m), m) *
           mod_inverse(static_cast<std::int64_t>(d.value()), m);
}

ValuatedResidue::ValuatedResidue(std::int64_t unit, int val, const PrimeContext& ctx)
    : unit_(ctx.residue(unit).value()), valuation_(val) {
    if (unit_ % ctx.p() == 0) throw InvalidArgument("ValuatedResidue: unit divisible by p");
    if (val < 0) throw NegativeValuation("ValuatedResidue: negative valuation");
}

ValuatedResidue valres_mul_rational(const ValuatedResidue& x, std::int64_t num, std::int64_t den,
                                    const PrimeContext& ctx) {
    if (den == 0) throw InvalidArgument("valres_mul_rational: zero denominator");
    if (x.zero_) return x;
    if (num == 0) return ValuatedResidue::zero();

    const auto p = static_cast<std::int64_t>(ctx.p());
    int shift = 0;
    while (num % p == 0) {
        num /= p;
        ++shift;
    }
    while (den % p == 0) {
        den /= p;
        --shift;
    }
    ValuatedResidue out = x;
    out.valuation_ += shift;
    if (out.valuation_ < 0) {
        throw NegativeValuation("valres_mul_rational: valuation dropped to " +
                                std::to_string(out.valuation_));
    }
    const Residue unit = Residue::canonical(x.unit_, ctx.modulus()) * ctx.residue(num) *
                         mod_inverse(den, ctx.modulus());
    out.unit_ = unit.value();
    return out;
}

ValuatedResidue valres_mul(const ValuatedResidue& a, const ValuatedResidue& b,
                           const PrimeContext& ctx) {
    if (a.zero_) return a;
    if (b.zero_) return b;
    ValuatedResidue out;
    out.unit_ = (Residue::canonical(a.unit_, ctx.modulus()) * Residue::canonical(b.unit_, ctx.modulus()))
                    .value();
    out.valuation_ = a.valuation_ + b.valuation_;
    return out;
}

Residue collapse(const ValuatedResidue& x, const PrimeContext& ctx) {
    const Residue unit = Residue::canonical(x.unit(), ctx.modulus());
    switch (x.val()) {
        case 0:
            return unit;
        case 1:
            return unit * ctx.residue(static_cast<std::int64_t>(ctx.p()));
        default:
            return ctx.zero();
    }
}

}  // namespace supercong
