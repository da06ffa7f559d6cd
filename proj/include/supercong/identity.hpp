#pragma once

/**
 * @file identity.hpp
 * @brief Exact verification of the combinatorial identity behind the theorem.
 *
 *   sum_k C(n,k) C(n+k,k) (a-b)^(n-k) b^k  =  sum_k C(n,k)^2 a^(n-k) b^k
 *
 * checked three ways: numerically at integer points, coefficient-wise in
 * Z[a, b], and through the generating function
 *
 *   [z^n] (1 - (a-b) z)^n / (1 - a z)^(n+1)
 *
 * which both sides equal.
 */

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace supercong {

/// Dense polynomial in two indeterminates (alpha, beta) with integer coefficients,
/// storing every monomial alpha^i beta^j with i + j <= degree.
class BivariatePolynomial {
public:
    explicit BivariatePolynomial(unsigned degree = 0);

    static BivariatePolynomial constant(const mpz_class& c);
    static BivariatePolynomial alpha();
    static BivariatePolynomial beta();
    static BivariatePolynomial monomial(const mpz_class& c, unsigned i, unsigned j);

    /// Bound on the total degree (storage capacity, not necessarily attained).
    unsigned degree() const { return degree_; }

    /// Coefficient of alpha^i beta^j; zero outside storage.
    mpz_class coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const mpz_class& c);

    BivariatePolynomial operator+(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const mpz_class& scalar) const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs) { return *this = *this + rhs; }

    BivariatePolynomial pow(unsigned e) const;
    mpz_class evaluate(const mpz_class& a, const mpz_class& b) const;

    /// Coefficient-wise equality, independent of storage capacity.
    bool operator==(const BivariatePolynomial& rhs) const;

private:
    std::size_t index(unsigned i, unsigned j) const { return std::size_t{i} * (degree_ + 1) + j; }

    unsigned degree_;
    std::vector<mpz_class> c_;
};

/// Power series in z truncated after z^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order);
    TruncatedSeries(unsigned order, std::vector<mpz_class> coeffs);

    /// (1 - c z)^(-e), coefficient k equal to C(e+k-1, k) c^k, by the term ratio recurrence.
    static TruncatedSeries reciprocal_power(const mpz_class& c, unsigned e, unsigned order);
    /// (1 + c z)^e, truncated.
    static TruncatedSeries binomial_power(const mpz_class& c, unsigned e, unsigned order);

    unsigned order() const { return static_cast<unsigned>(a_.size() - 1); }
    const mpz_class& coeff(unsigned k) const { return a_.at(k); }
    const std::vector<mpz_class>& coeffs() const { return a_; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    /// Multiplicative inverse by the convolution recurrence. The constant term must be +-1.
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<mpz_class> a_;
};

mpz_class gould_lhs(unsigned n, const mpz_class& a, const mpz_class& b);
mpz_class gould_rhs(unsigned n, const mpz_class& a, const mpz_class& b);

/// Both sides of the identity expanded in Z[alpha, beta].
BivariatePolynomial gould_lhs_polynomial(unsigned n);
BivariatePolynomial gould_rhs_polynomial(unsigned n);
bool gould_polynomial_check(unsigned n);

/// [z^n] (1 - (a-b) z)^n (1 - a z)^(-(n+1)).
mpz_class gf_coefficient(unsigned n, const mpz_class& a, const mpz_class& b);
/// gf_coefficient == gould_lhs == gould_rhs at (a, b).
bool gf_coefficient_check(unsigned n, const mpz_class& a, const mpz_class& b);

/// sum_{k=0}^{2f} C(2f,k)^2 (-1)^k == (-1)^f C(2f,f).
bool alternating_identity_check(unsigned f);

}  // namespace supercong
