#pragma once

#include <cstdint>
#include <vector>

#include "supercong/errors.hpp"

namespace supercong {

/// All primes in [lo, hi], ascending, by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// p = x^2 + y^2 with x odd, x = 1 (mod 4), y even and positive.
struct QuadraticPartition {
    std::uint64_t p = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const QuadraticPartition&) const = default;
};

/// A square root of -1 mod p for p = 1 (mod 4), normalized to z <= p/2.
/// Throws BadResidueClass otherwise.
std::uint64_t sqrt_minus_one(std::uint64_t p);

/// Two-squares decomposition of p = 1 (mod 4) by Euclidean descent on (p, sqrt(-1)).
QuadraticPartition cornacchia(std::uint64_t p);

}  // namespace supercong
