#include "supercong/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace supercong {

namespace {

constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 20;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain sieve for the base primes up to sqrt(hi).
std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

void require_one_mod_four(std::uint64_t p, const char* who) {
    if (p % 4 != 1) {
        throw BadResidueClass(std::string(who) + ": " + std::to_string(p) + " is not 1 mod 4");
    }
}

}  // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    lo = std::max<std::uint64_t>(lo, 2);
    if (lo > hi) return out;

    const auto base = small_primes(isqrt(hi));
    std::vector<char> flags(kSegmentSize);
    for (std::uint64_t start = lo; start <= hi; start += kSegmentSize) {
        const std::uint64_t stop = std::min(hi, start + kSegmentSize - 1);
        const std::uint64_t len = stop - start + 1;
        std::fill(flags.begin(), flags.begin() + static_cast<std::ptrdiff_t>(len), 1);
        for (const std::uint64_t q : base) {
            if (q * q > stop) break;
            std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
            for (std::uint64_t j = first; j <= stop; j += q) flags[j - start] = 0;
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            if (flags[i]) out.push_back(start + i);
        }
        if (stop == hi) break;
    }
    return out;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
    require_one_mod_four(p, "sqrt_minus_one");
    std::uint64_t a = 2;
    while (powmod(a, (p - 1) / 2, p) != p - 1) ++a;
    const std::uint64_t z = powmod(a, (p - 1) / 4, p);
    return z <= p / 2 ? z : p - z;
}

QuadraticPartition cornacchia(std::uint64_t p) {
    require_one_mod_four(p, "cornacchia");
    std::uint64_t a = p;
    std::uint64_t b = sqrt_minus_one(p);
    while (b * b > p) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    const std::uint64_t rest = p - b * b;
    const std::uint64_t c = isqrt(rest);
    if (c * c != rest) {
        throw InvalidArgument("cornacchia: descent failed for " + std::to_string(p) +
                              " (not prime?)");
    }
    auto odd = static_cast<std::int64_t>(b % 2 == 1 ? b : c);
    const auto even = static_cast<std::int64_t>(b % 2 == 1 ? c : b);
    if (odd % 4 != 1) odd = -odd;
    return {p, odd, even};
}

}  // namespace supercong
