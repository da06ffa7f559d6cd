#pragma once

#include <cstdint>

namespace supercong {

/// F_k and L_k modulo m.
struct FibPair {
    std::uint64_t modulus = 1;
    std::uint64_t k = 0;
    std::uint64_t f = 0;
    std::uint64_t l = 0;

    bool operator==(const FibPair&) const = default;
};

/// Fibonacci and Lucas numbers mod m by fast doubling on (F_k, F_{k+1}).
FibPair fib_lucas(std::uint64_t k, std::uint64_t m);

/// Consecutive (F_k, L_k) mod m for k = 0, 1, 2, ...
class FibLucasStream {
public:
    explicit FibLucasStream(std::uint64_t m);

    const FibPair& current() const { return cur_; }
    const FibPair& next();

private:
    FibPair cur_;
    std::uint64_t f_next_;  // F_{k+1}
    std::uint64_t l_next_;  // L_{k+1}
};

}  // namespace supercong
