#pragma once

/**
 * @file checks.hpp
 * @brief Congruences mod p^2 around sum_k C(2k,k)^2 16^-k, evaluated by streaming.
 *
 * Every check returns a CheckRecord whose lhs and rhs are canonical residues
 * mod p^2 rendered in decimal, with ok set exactly when they are equal. An
 * independent exact-integer route lives in oracle.hpp.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/residue.hpp"

namespace supercong {

/// One verdict. Records marked informational are reported but do not count
/// towards the exit status unless the scan runs in strict mode.
struct CheckRecord {
    std::uint64_t p = 0;
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool ok = false;

    bool informational() const;
    /// Value of a named parameter, or empty.
    std::string param(std::string_view key) const;

    bool operator==(const CheckRecord&) const = default;
};

inline constexpr std::string_view kInformationalKey = "status";
inline constexpr std::string_view kInformationalValue = "informational";

// --- the two sides of the two-parameter congruence -------------------------

/// sum_{k=0}^{n} C(2k,k)^2 (alpha-beta)^(n-k) (-beta)^k 16^-k
Residue theorem_lhs(const PrimeContext& ctx, Residue alpha, Residue beta);

/// sum_{k=0}^{n} C(n,k)^2 alpha^(n-k) beta^k
Residue theorem_rhs(const PrimeContext& ctx, Residue alpha, Residue beta);

/// sum_{k=0}^{p-1} C(2k,k)^2 ratio^k, with p-divisible central terms handled exactly.
Residue central_square_sum(const PrimeContext& ctx, Residue ratio);

/// sum_{k=0}^{p-1} C(2k,k)^2 F_k 16^-k and the same with L_k.
Residue fibonacci_sum(const PrimeContext& ctx);
Residue lucas_sum(const PrimeContext& ctx);

// --- checks ------------------------------------------------------------------

CheckRecord check_theorem(const PrimeContext& ctx, Residue alpha, Residue beta);

/// T(a,b) = T(b,a) = (-1)^n T(-a,-b) with T = theorem_lhs.
CheckRecord symmetry_check(const PrimeContext& ctx, Residue alpha, Residue beta);

/// sum_{k<p} C(2k,k)^2 16^-k = (-1)^n.
CheckRecord rv_check(const PrimeContext& ctx);

/// p^2 | C(2k,k)^2 for n < k < p-1. The k = p-1 verdict is reported in params
/// ("top_vanishes") and does not affect ok.
CheckRecord tail_vanishing_check(const PrimeContext& ctx);

/// sum C(2k,k)^2 (t/16)^k = (-1)^n sum C(2k,k)^2 ((1-t)/16)^k, both sums over k < p.
CheckRecord remark_i_check(const PrimeContext& ctx, Residue t);

/// Fibonacci-weighted sum vanishes for p = 1 (mod 4). Throws WrongResidueClass
/// otherwise. At p = 5 the record is informational.
CheckRecord fib_check(const PrimeContext& ctx);

/// Lucas-weighted sum vanishes for p = 3 (mod 4). Throws WrongResidueClass otherwise.
CheckRecord lucas_check(const PrimeContext& ctx);

/// sum_{k<p} C(2k,k)^2 32^-k: 0 for p = 3 (mod 4), 2x - p/(2x) for p = 1 (mod 4).
CheckRecord sun_check(const PrimeContext& ctx);

/// (-4)^-f C(2f,f) = 2x - p/(2x) mod p^2 with f = (p-1)/4, together with the exact
/// identity sum_{k<=2f} C(2f,k)^2 (-1)^k = (-1)^f C(2f,f). Throws WrongResidueClass
/// unless p = 1 (mod 4).
CheckRecord gauss_binomial_check(const PrimeContext& ctx);

/// C(n+k, 2k) = C(2k,k) (-16)^-k mod p^2 for every 0 <= k <= n.
CheckRecord key_congruence_check(const PrimeContext& ctx);

/// product_formula_check for every 0 <= k <= n; lhs/rhs count passing and total k.
CheckRecord product_formula_record(const PrimeContext& ctx);

}  // namespace supercong
