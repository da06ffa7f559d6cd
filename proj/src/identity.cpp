#include "supercong/identity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "supercong/binomial.hpp"
#include "supercong/errors.hpp"

namespace supercong {

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(unsigned degree)
    : degree_(degree), c_(std::size_t{degree + 1} * (degree + 1)) {}

BivariatePolynomial BivariatePolynomial::constant(const mpz_class& c) {
    return monomial(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::alpha() { return monomial(1, 1, 0); }

BivariatePolynomial BivariatePolynomial::beta() { return monomial(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(const mpz_class& c, unsigned i, unsigned j) {
    BivariatePolynomial out(i + j);
    out.set_coeff(i, j, c);
    return out;
}

mpz_class BivariatePolynomial::coeff(unsigned i, unsigned j) const {
    if (i + j > degree_) return 0;
    return c_[index(i, j)];
}

void BivariatePolynomial::set_coeff(unsigned i, unsigned j, const mpz_class& c) {
    if (i + j > degree_) throw InvalidArgument("BivariatePolynomial: monomial exceeds degree bound");
    c_[index(i, j)] = c;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out(std::max(degree_, rhs.degree_));
    for (unsigned i = 0; i <= out.degree_; ++i) {
        for (unsigned j = 0; i + j <= out.degree_; ++j) {
            out.c_[out.index(i, j)] = coeff(i, j) + rhs.coeff(i, j);
        }
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& rhs) const {
    return *this + rhs * mpz_class(-1);
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out(degree_ + rhs.degree_);
    for (unsigned i = 0; i <= degree_; ++i) {
        for (unsigned j = 0; i + j <= degree_; ++j) {
            const mpz_class& a = c_[index(i, j)];
            if (a == 0) continue;
            for (unsigned k = 0; k <= rhs.degree_; ++k) {
                for (unsigned l = 0; k + l <= rhs.degree_; ++l) {
                    const mpz_class& b = rhs.c_[rhs.index(k, l)];
                    if (b == 0) continue;
                    out.c_[out.index(i + k, j + l)] += a * b;
                }
            }
        }
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const mpz_class& scalar) const {
    BivariatePolynomial out = *this;
    for (auto& c : out.c_) c *= scalar;
    return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned e) const {
    BivariatePolynomial result = constant(1);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

mpz_class BivariatePolynomial::evaluate(const mpz_class& a, const mpz_class& b) const {
    mpz_class total = 0;
    mpz_class a_pow = 1;
    for (unsigned i = 0; i <= degree_; ++i) {
        mpz_class inner = 0;
        for (unsigned j = degree_ - i + 1; j-- > 0;) inner = inner * b + c_[index(i, j)];
        total += inner * a_pow;
        a_pow *= a;
    }
    return total;
}

bool BivariatePolynomial::operator==(const BivariatePolynomial& rhs) const {
    const unsigned d = std::max(degree_, rhs.degree_);
    for (unsigned i = 0; i <= d; ++i) {
        for (unsigned j = 0; i + j <= d; ++j) {
            if (coeff(i, j) != rhs.coeff(i, j)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(unsigned order) : a_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<mpz_class> coeffs) : a_(std::move(coeffs)) {
    a_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::reciprocal_power(const mpz_class& c, unsigned e, unsigned order) {
    // a_k = a_{k-1} * c * (e + k - 1) / k
    TruncatedSeries out(order);
    out.a_[0] = 1;
    mpz_class binom = 1;  // C(e + k - 1, k)
    mpz_class c_pow = 1;
    for (unsigned k = 1; k <= order; ++k) {
        binom *= e + k - 1;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
        c_pow *= c;
        out.a_[k] = binom * c_pow;
    }
    return out;
}

TruncatedSeries TruncatedSeries::binomial_power(const mpz_class& c, unsigned e, unsigned order) {
    TruncatedSeries out(order);
    mpz_class c_pow = 1;
    for (unsigned k = 0; k <= std::min(e, order); ++k) {
        out.a_[k] = exact_binomial(e, k) * c_pow;
        c_pow *= c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order(), rhs.order()));
    for (unsigned k = 0; k <= out.order(); ++k) out.a_[k] = a_[k] + rhs.a_[k];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order(), rhs.order()));
    for (unsigned i = 0; i <= out.order(); ++i) {
        if (a_[i] == 0) continue;
        for (unsigned j = 0; i + j <= out.order(); ++j) out.a_[i + j] += a_[i] * rhs.a_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const mpz_class& a0 = a_[0];
    if (a0 != 1 && a0 != -1) {
        throw InvalidArgument("TruncatedSeries::inverse: constant term must be +-1 over Z");
    }
    // b_0 = 1/a_0, b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}; 1/a_0 == a_0 for a_0 = +-1.
    TruncatedSeries out(order());
    out.a_[0] = a0;
    for (unsigned k = 1; k <= order(); ++k) {
        mpz_class acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += a_[j] * out.a_[k - j];
        out.a_[k] = -acc * a0;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks

mpz_class gould_lhs(unsigned n, const mpz_class& a, const mpz_class& b) {
    const mpz_class diff = a - b;
    mpz_class total = 0;
    mpz_class b_pow = 1;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_class diff_pow;
        mpz_pow_ui(diff_pow.get_mpz_t(), diff.get_mpz_t(), n - k);
        total += exact_binomial(n, k) * exact_binomial(n + k, k) * diff_pow * b_pow;
        b_pow *= b;
    }
    return total;
}

mpz_class gould_rhs(unsigned n, const mpz_class& a, const mpz_class& b) {
    mpz_class total = 0;
    mpz_class b_pow = 1;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_class a_pow;
        mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), n - k);
        const mpz_class c = exact_binomial(n, k);
        total += c * c * a_pow * b_pow;
        b_pow *= b;
    }
    return total;
}

BivariatePolynomial gould_lhs_polynomial(unsigned n) {
    const BivariatePolynomial diff = BivariatePolynomial::alpha() - BivariatePolynomial::beta();
    BivariatePolynomial total(n);
    BivariatePolynomial diff_pow = BivariatePolynomial::constant(1);  // (alpha - beta)^(n-k)
    for (unsigned k = n + 1; k-- > 0;) {
        const mpz_class weight = exact_binomial(n, k) * exact_binomial(n + k, k);
        total += diff_pow * BivariatePolynomial::monomial(weight, 0, k);
        if (k > 0) diff_pow = diff_pow * diff;
    }
    return total;
}

BivariatePolynomial gould_rhs_polynomial(unsigned n) {
    BivariatePolynomial total(n);
    for (unsigned k = 0; k <= n; ++k) {
        const mpz_class c = exact_binomial(n, k);
        total.set_coeff(n - k, k, c * c);
    }
    return total;
}

bool gould_polynomial_check(unsigned n) {
    return gould_lhs_polynomial(n) == gould_rhs_polynomial(n);
}

mpz_class gf_coefficient(unsigned n, const mpz_class& a, const mpz_class& b) {
    const TruncatedSeries numer = TruncatedSeries::binomial_power(b - a, n, n);
    const TruncatedSeries denom_inv = TruncatedSeries::reciprocal_power(a, n + 1, n);
    return (numer * denom_inv).coeff(n);
}

bool gf_coefficient_check(unsigned n, const mpz_class& a, const mpz_class& b) {
    const mpz_class coeff = gf_coefficient(n, a, b);
    return coeff == gould_lhs(n, a, b) && coeff == gould_rhs(n, a, b);
}

bool alternating_identity_check(unsigned f) {
    const std::vector<mpz_class> row = binomial_row(2 * f);
    mpz_class total = 0;
    for (unsigned k = 0; k <= 2 * f; ++k) {
        if (k % 2 == 0) total += row[k] * row[k];
        else total -= row[k] * row[k];
    }
    const mpz_class& central = row[f];
    return total == (f % 2 == 0 ? central : mpz_class(-central));
}

}  // namespace supercong
