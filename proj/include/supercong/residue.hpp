#pragma once

/**
 * @file residue.hpp
 * @brief Arithmetic in Z/p^2 Z.
 *
 * Every congruence handled by this library lives in the ring Z/p^2 Z for an
 * odd prime p. PrimeContext fixes the prime and its derived constants;
 * Residue is a canonical element of the ring; ValuatedResidue carries a
 * p-adic valuation next to a unit so that running products may pass
 * through p-divisible factors without losing information mod p^2.
 *
 * Moduli are kept in 64 bits with 128-bit intermediate products, which
 * bounds the prime at p < 2^32.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "supercong/errors.hpp"

namespace supercong {

/// A canonical residue in [0, modulus).
class Residue {
public:
    constexpr Residue() = default;

    /// Reduces an arbitrary signed value into [0, modulus).
    Residue(std::int64_t value, std::uint64_t modulus);

    /// Wraps an already-canonical value. Caller guarantees value < modulus.
    static constexpr Residue canonical(std::uint64_t value, std::uint64_t modulus) {
        Residue r;
        r.value_ = value;
        r.modulus_ = modulus;
        return r;
    }

    constexpr std::uint64_t value() const { return value_; }
    constexpr std::uint64_t modulus() const { return modulus_; }
    constexpr bool is_zero() const { return value_ == 0; }

    Residue operator+(Residue rhs) const;
    Residue operator-(Residue rhs) const;
    Residue operator*(Residue rhs) const;
    Residue operator-() const;

    Residue& operator+=(Residue rhs) { return *this = *this + rhs; }
    Residue& operator-=(Residue rhs) { return *this = *this - rhs; }
    Residue& operator*=(Residue rhs) { return *this = *this * rhs; }

    constexpr bool operator==(const Residue&) const = default;

    std::string str() const { return std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
};

/// Inverse of a modulo m by extended Euclid. Throws NotInvertible when gcd(a, m) != 1.
Residue mod_inverse(std::int64_t a, std::uint64_t m);

/// a^e by square-and-multiply.
Residue pow_mod(Residue a, std::uint64_t e);

/// An odd prime p together with the ring Z/p^2 Z and its frequently used constants.
class PrimeContext {
public:
    /// Throws InvalidArgument unless p is an odd prime below 2^32.
    explicit PrimeContext(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t modulus() const { return m_; }
    /// (p - 1) / 2
    std::uint64_t n() const { return n_; }

    Residue inv16() const { return inv16_; }
    Residue inv32() const { return inv32_; }

    Residue residue(std::int64_t value) const { return Residue(value, m_); }
    Residue zero() const { return Residue::canonical(0, m_); }
    Residue one() const { return Residue::canonical(1, m_); }

    /// (-1)^n mod p^2.
    Residue sign_n() const { return n_ % 2 == 0 ? one() : residue(-1); }

private:
    std::uint64_t p_;
    std::uint64_t m_;
    std::uint64_t n_;
    Residue inv16_;
    Residue inv32_;
};

/// num / den lifted into Z/p^2 Z. Throws NotInvertible when p | den.
Residue from_rational(std::int64_t num, std::int64_t den, const PrimeContext& ctx);

/// Parses a p-adic integer given as a decimal integer or a rational "a/b"
/// of arbitrary size and reduces it mod p^2.
Residue parse_padic(std::string_view text, const PrimeContext& ctx);

/// A residue mod p^2 stored as unit * p^val.
///
/// The valuation is tracked exactly internally; val() reports it saturated
/// at 2 since anything divisible by p^2 is zero in the ring. The unit is
/// kept mod p^2 regardless of the valuation. An exact zero (a zero factor
/// entered the product) is an explicit marker with no unit.
class ValuatedResidue {
public:
    /// The multiplicative identity.
    ValuatedResidue() = default;

    /// unit * p^val. Throws InvalidArgument if p divides unit.
    ValuatedResidue(std::int64_t unit, int val, const PrimeContext& ctx);

    static ValuatedResidue zero() {
        ValuatedResidue v;
        v.zero_ = true;
        return v;
    }

    bool is_zero() const { return zero_; }
    std::uint64_t unit() const { return unit_; }
    /// p-adic valuation saturated at 2. A zero marker reports 2.
    int val() const { return zero_ || valuation_ > 2 ? 2 : valuation_; }
    /// Unsaturated valuation of a non-zero value.
    int exact_valuation() const { return valuation_; }

    bool operator==(const ValuatedResidue&) const = default;

private:
    friend ValuatedResidue valres_mul_rational(const ValuatedResidue&, std::int64_t, std::int64_t,
                                               const PrimeContext&);
    friend ValuatedResidue valres_mul(const ValuatedResidue&, const ValuatedResidue&,
                                      const PrimeContext&);

    std::uint64_t unit_ = 1;
    int valuation_ = 0;
    bool zero_ = false;
};

/// x * num / den with all factors of p stripped from num and den into the
/// valuation. Throws NegativeValuation if the running valuation would drop
/// below zero and InvalidArgument when den == 0.
ValuatedResidue valres_mul_rational(const ValuatedResidue& x, std::int64_t num, std::int64_t den,
                                    const PrimeContext& ctx);

/// Product of two valuated residues.
ValuatedResidue valres_mul(const ValuatedResidue& a, const ValuatedResidue& b,
                           const PrimeContext& ctx);

/// unit * p^val reduced mod p^2.
Residue collapse(const ValuatedResidue& x, const PrimeContext& ctx);

/// Trial-division primality test; adequate for the 32-bit primes used here.
bool is_prime(std::uint64_t n);

}  // namespace supercong
