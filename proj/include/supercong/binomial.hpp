#pragma once

/**
 * @file binomial.hpp
 * @brief Binomial coefficients mod p^2 by streaming, plus an exact oracle.
 *
 * The streams step k -> k+1 with one rational multiplier each, routed through
 * ValuatedResidue so that factors of p in numerator or denominator are
 * carried as valuation instead of being lost in Z/p^2 Z. The central stream
 * is the one that needs it: C(2k,k) is divisible by p for (p-1)/2 < k < p.
 */

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "supercong/residue.hpp"

namespace supercong {

enum class StreamKind {
    central,  ///< C(2k, k) for 0 <= k <= p-1
    half,     ///< C(n, k) for 0 <= k <= n, n = (p-1)/2
    middle,   ///< C(n+k, 2k) for 0 <= k <= n
};

std::string_view to_string(StreamKind kind);

class BinomialStream {
public:
    BinomialStream(const PrimeContext& ctx, StreamKind kind);

    StreamKind kind() const { return kind_; }
    std::uint64_t k() const { return k_; }
    std::uint64_t last_index() const { return last_; }
    bool exhausted() const { return k_ >= last_; }

    const ValuatedResidue& current() const { return current_; }
    Residue value() const { return collapse(current_, ctx_); }

    /// Advances to k+1 and returns the new term. Throws RangeExhausted past last_index().
    const ValuatedResidue& next();

private:
    PrimeContext ctx_;
    StreamKind kind_;
    std::uint64_t k_ = 0;
    std::uint64_t last_;
    ValuatedResidue current_;
};

/// C(n, k) exactly; zero outside 0 <= k <= n.
mpz_class exact_binomial(std::uint64_t n, std::int64_t k);

/// C(n, 0), ..., C(n, n) built by the row recurrence.
std::vector<mpz_class> binomial_row(std::uint64_t n);

/// Largest e with p^e | value, for value != 0.
unsigned padic_valuation(const mpz_class& value, std::uint64_t p);

/// prod_{j=1..k} (p^2 - (2j-1)^2).
mpz_class odd_square_product(std::uint64_t p, std::uint64_t k);

/// C((p-1)/2 + k, 2k) == odd_square_product(p, k) / (4^k (2k)!) as an exact division.
bool product_formula_check(std::uint64_t p, std::uint64_t k);

/// C(n,k) C(n+k,k) == C(n+k,2k) C(2k,k).
bool trinomial_revision_check(std::uint64_t n, std::uint64_t k);

}  // namespace supercong
