#include "doctest.h"

#include <random>

#include "supercong/residue.hpp"

using namespace supercong;

namespace {

// Brute-force inverse search: the independent oracle for mod_inverse.
std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t m) {
    for (std::uint64_t r = 0; r < m; ++r) {
        if ((a % m) * r % m == 1) return r;
    }
    return m;
}

std::uint64_t repeated_product(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i) r = r * a % m;
    return r;
}

}  // namespace

TEST_CASE("residues are canonical") {
    CHECK(Residue(-1, 25).value() == 24);
    CHECK(Residue(-50, 25).value() == 0);
    CHECK(Residue(27, 25).value() == 2);
    const Residue a(20, 25), b(9, 25);
    CHECK((a + b).value() == 4);
    CHECK((b - a).value() == 14);
    CHECK((a * b).value() == 180 % 25);
    CHECK((-a).value() == 5);
    CHECK((-Residue(0, 25)).value() == 0);
}

TEST_CASE("addition near 2^64 does not overflow") {
    const std::uint64_t m = 4294967291ULL * 4294967291ULL;  // largest 32-bit prime squared
    const Residue a = Residue::canonical(m - 1, m);
    CHECK((a + a).value() == m - 2);
    CHECK((a * a).value() == 1);
    CHECK((a - Residue::canonical(m - 2, m)).value() == 1);
}

TEST_CASE("mod_inverse") {
    CHECK(brute_inverse(16, 9) == 4);
    CHECK(mod_inverse(16, 9).value() == 4);
    CHECK(mod_inverse(1, 1000003).value() == 1);
    CHECK_THROWS_AS(mod_inverse(3, 9), NotInvertible);
    CHECK(mod_inverse(-1, 25).value() == 24);

    SUBCASE("agrees with brute force on small moduli") {
        for (std::uint64_t m : {9ULL, 25ULL, 49ULL, 121ULL, 169ULL}) {
            for (std::int64_t a = 1; a < static_cast<std::int64_t>(m); ++a) {
                const std::uint64_t expect = brute_inverse(static_cast<std::uint64_t>(a), m);
                if (expect == m) {
                    CHECK_THROWS_AS(mod_inverse(a, m), NotInvertible);
                } else {
                    CHECK(mod_inverse(a, m).value() == expect);
                }
            }
        }
    }

    SUBCASE("random units times inverse are one") {
        std::mt19937_64 rng(7);
        for (const std::uint64_t p : {3ULL, 101ULL, 65521ULL, 4294967291ULL}) {
            const std::uint64_t m = p * p;
            for (int i = 0; i < 1000; ++i) {
                auto a = static_cast<std::int64_t>(rng() >> 2);
                if (static_cast<std::uint64_t>(a) % p == 0) ++a;
                CHECK((Residue(a, m) * mod_inverse(a, m)).value() == 1);
            }
        }
    }
}

TEST_CASE("pow_mod") {
    CHECK(repeated_product(2, 10, 25) == 24);
    CHECK(pow_mod(Residue(2, 25), 10).value() == 24);
    CHECK(pow_mod(Residue(12345, 169), 0).value() == 1);
    CHECK(pow_mod(Residue(-1, 169), 6).value() == 1);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = 10007ULL * 10007ULL;
        const Residue a(static_cast<std::int64_t>(rng() % m), m);
        const std::uint64_t e1 = rng() % 100000, e2 = rng() % 100000;
        CHECK(pow_mod(a, e1 + e2) == pow_mod(a, e1) * pow_mod(a, e2));
    }
    CHECK(pow_mod(Residue(7, 121), 37).value() == repeated_product(7, 37, 121));
}

TEST_CASE("PrimeContext") {
    const PrimeContext ctx(13);
    CHECK(ctx.modulus() == 169);
    CHECK(ctx.n() == 6);
    CHECK(2 * ctx.n() + 1 == ctx.p());
    CHECK((ctx.inv16() * ctx.residue(16)).value() == 1);
    CHECK((ctx.inv32() * ctx.residue(32)).value() == 1);
    CHECK(ctx.sign_n().value() == 1);
    CHECK(PrimeContext(7).sign_n().value() == 48);
    CHECK_THROWS_AS(PrimeContext(2), InvalidArgument);
    CHECK_THROWS_AS(PrimeContext(9), InvalidArgument);
    CHECK_THROWS_AS(PrimeContext(1), InvalidArgument);
    CHECK_NOTHROW(PrimeContext(4294967291ULL));
}

TEST_CASE("from_rational and parse_padic") {
    const PrimeContext five(5);
    CHECK(from_rational(1, 2, five).value() == 13);  // 2 * 13 = 26
    CHECK(from_rational(0, 7, five).value() == 0);
    CHECK_THROWS_AS(from_rational(1, 5, five), NotInvertible);
    CHECK_THROWS_AS(from_rational(1, 0, five), InvalidArgument);
    CHECK(from_rational(-1, 2, five).value() == 12);

    CHECK(parse_padic("1/2", five).value() == 13);
    CHECK(parse_padic("-1/2", five).value() == 12);
    CHECK(parse_padic("-1", five).value() == 24);
    CHECK(parse_padic("100000000000000000000000000001", five).value() == 1);
    CHECK_THROWS_AS(parse_padic("3/10", five), NotInvertible);
    CHECK_THROWS_AS(parse_padic("x", five), InvalidArgument);
    CHECK_THROWS_AS(parse_padic("1/0", five), InvalidArgument);
}

TEST_CASE("valuated residues") {
    const PrimeContext ctx(5);

    SUBCASE("C(8,4) to C(10,5) divides by p") {
        const ValuatedResidue c84(14, 1, ctx);  // 70 = 14 * 5
        CHECK(collapse(c84, ctx).value() == 20);
        const ValuatedResidue c105 = valres_mul_rational(c84, 18, 5, ctx);
        CHECK(c105.val() == 0);
        CHECK(c105.unit() == 2);
        CHECK(collapse(c105, ctx).value() == 252 % 25);
    }

    SUBCASE("saturation") {
        const ValuatedResidue x = valres_mul_rational(ValuatedResidue(3, 1, ctx), 5, 1, ctx);
        CHECK(x.val() == 2);
        CHECK(collapse(x, ctx).value() == 0);
        // Dividing back out recovers the unit, which is kept mod p^2.
        const ValuatedResidue back = valres_mul_rational(x, 1, 5, ctx);
        CHECK(back.val() == 1);
        CHECK(collapse(back, ctx).value() == 15);
        // Beyond p^2 the exact valuation is still tracked.
        const ValuatedResidue deep = valres_mul_rational(x, 125, 1, ctx);
        CHECK(deep.val() == 2);
        CHECK(deep.exact_valuation() == 5);
    }

    SUBCASE("identity multiplier") {
        const ValuatedResidue one;
        CHECK(valres_mul_rational(one, 7, 7, ctx) == one);
        CHECK(collapse(ValuatedResidue(7, 0, ctx), ctx).value() == 7);
        CHECK(collapse(ValuatedResidue(7, 2, ctx), ctx).value() == 0);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(valres_mul_rational(ValuatedResidue(), 1, 5, ctx), NegativeValuation);
        CHECK_THROWS_AS(valres_mul_rational(ValuatedResidue(), 1, 0, ctx), InvalidArgument);
        CHECK_THROWS_AS(ValuatedResidue(10, 0, ctx), InvalidArgument);
    }

    SUBCASE("zero marker absorbs") {
        const ValuatedResidue z = valres_mul_rational(ValuatedResidue(), 0, 3, ctx);
        CHECK(z.is_zero());
        CHECK(collapse(valres_mul_rational(z, 1, 25, ctx), ctx).value() == 0);
    }

    SUBCASE("negative multipliers") {
        const ValuatedResidue x = valres_mul_rational(ValuatedResidue(), -3, 2, ctx);
        CHECK(collapse(x, ctx) == from_rational(-3, 2, ctx));
    }

    SUBCASE("collapse at val 1 only sees the unit mod p") {
        std::mt19937_64 rng(5);
        const PrimeContext big(10007);
        for (int i = 0; i < 500; ++i) {
            auto u = static_cast<std::int64_t>(rng() % big.modulus());
            if (u % 10007 == 0) ++u;
            const auto t = static_cast<std::int64_t>(rng() % 10007);
            CHECK(collapse(ValuatedResidue(u, 1, big), big) ==
                  collapse(ValuatedResidue(u + 10007 * t, 1, big), big));
        }
    }
}
