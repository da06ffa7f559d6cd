#pragma once

/**
 * @file oracle.hpp
 * @brief Exact big-integer evaluation of every sum the checks compute mod p^2.
 *
 * Sums of the form sum_{k=0}^{K} w_k X^(K-k) Y^k with rational X, Y are made
 * integral by multiplying through by (den(X) den(Y))^K. The result carries
 * both the cleared integer and the scale, so a congruence mod p^2 can be
 * compared after dividing the unit scale back out.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "supercong/residue.hpp"

namespace supercong {

/// value == scale * (the rational sum).
struct OracleSum {
    mpz_class value;
    mpz_class scale = 1;

    /// value / scale mod p^2. Throws NotInvertible when p | scale.
    Residue reduce(const PrimeContext& ctx) const;
};

/// Rational parameters for the parametrized sums; unused ones are ignored.
struct OracleParams {
    mpq_class alpha = 0;
    mpq_class beta = 0;
    mpq_class t = 0;
};

/// Kinds: rv, theorem_lhs, theorem_rhs, remark_i_lhs, remark_i_rhs, fib, lucas, sun, gauss.
const std::vector<std::string>& oracle_kinds();

/// Exact value of the named sum at prime p. Throws UnknownKind.
OracleSum oracle_sum(std::string_view kind, std::uint64_t p, const OracleParams& params = {});

/// sum_k weights[k] X^(K-k) Y^k with K = weights.size() - 1, denominators cleared.
/// Empty weights give 0.
OracleSum cleared_sum(const std::vector<mpz_class>& weights, const mpq_class& x, const mpq_class& y);

/// Parses "a" or "a/b" into a canonical rational. Throws InvalidArgument.
mpq_class parse_rational(std::string_view text);

}  // namespace supercong
