#include "doctest.h"

#include <cstdint>
#include <vector>

#include "supercong/primes.hpp"

using namespace supercong;

namespace {

bool trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// All (x, y) with x odd, y even, y > 0, x^2 + y^2 = p and x = 1 (mod 4).
std::vector<QuadraticPartition> exhaustive_partitions(std::uint64_t p) {
    std::vector<QuadraticPartition> out;
    const auto n = static_cast<std::int64_t>(p);
    std::int64_t root = 0;
    while ((root + 1) * (root + 1) <= n) ++root;
    for (std::int64_t x = -root; x <= root; ++x) {
        const std::int64_t rest = n - x * x;
        std::int64_t y = 0;
        while ((y + 1) * (y + 1) <= rest) ++y;
        if (y == 0 || y * y != rest) continue;
        if (y % 2 != 0 || ((x % 4) + 4) % 4 != 1) continue;
        out.push_back({p, x, y});
    }
    return out;
}

}  // namespace

TEST_CASE("primes_in_range") {
    CHECK(primes_in_range(3, 20) == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_in_range(14, 16).empty());
    CHECK(primes_in_range(2, 2) == std::vector<std::uint64_t>{2});
    CHECK(primes_in_range(3, 1000000).size() == 78497);

    std::vector<std::uint64_t> reference;
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        if (trial_division(n)) reference.push_back(n);
    }
    CHECK(primes_in_range(2, 10000) == reference);

    // Crosses several sieve segments; compare against trial division.
    const auto far = primes_in_range(999000000, 1001100000);
    std::uint64_t checked = 0;
    for (std::size_t i = 0; i < far.size(); i += 997, ++checked) CHECK(trial_division(far[i]));
    CHECK(checked > 0);
    CHECK(far.front() == 999000011);
}

TEST_CASE("sqrt_minus_one") {
    CHECK(sqrt_minus_one(5) == 2);
    CHECK(sqrt_minus_one(13) == 5);
    CHECK_THROWS_AS(sqrt_minus_one(7), BadResidueClass);
    for (const std::uint64_t p : primes_in_range(3, 200000)) {
        if (p % 4 != 1) continue;
        const std::uint64_t z = sqrt_minus_one(p);
        CHECK(z <= p / 2);
        CHECK((z * z + 1) % p == 0);
    }
}

TEST_CASE("cornacchia") {
    CHECK(cornacchia(5) == QuadraticPartition{5, 1, 2});
    CHECK(cornacchia(13) == QuadraticPartition{13, -3, 2});
    CHECK(cornacchia(29) == QuadraticPartition{29, 5, 2});
    CHECK_THROWS_AS(cornacchia(7), BadResidueClass);

    SUBCASE("agrees with exhaustive search below 10^5") {
        for (const std::uint64_t p : primes_in_range(3, 100000)) {
            if (p % 4 != 1) continue;
            const auto expect = exhaustive_partitions(p);
            REQUIRE(expect.size() == 1);
            CHECK(cornacchia(p) == expect.front());
        }
    }

    SUBCASE("normalization on large primes") {
        for (const std::uint64_t p : primes_in_range(4294900000ULL, 4294967295ULL)) {
            if (p % 4 != 1) continue;
            const QuadraticPartition q = cornacchia(p);
            CHECK(static_cast<std::uint64_t>(q.x * q.x) + static_cast<std::uint64_t>(q.y * q.y) == p);
            CHECK(((q.x % 4) + 4) % 4 == 1);
            CHECK(q.y > 0);
            CHECK(q.y % 2 == 0);
        }
    }
}
