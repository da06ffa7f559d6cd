#include "supercong/sequences.hpp"

namespace supercong {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

}  // namespace

FibPair fib_lucas(std::uint64_t k, std::uint64_t m) {
    // (a, b) = (F_j, F_{j+1}) while j walks the bits of k from the top.
    std::uint64_t a = 0, b = 1 % m;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t twice_b_minus_a = sub(add(b, b, m), a, m);
        const std::uint64_t c = mul(a, twice_b_minus_a, m);      // F_{2j}
        const std::uint64_t d = add(mul(a, a, m), mul(b, b, m), m);  // F_{2j+1}
        if ((k >> bit) & 1) {
            a = d;
            b = add(c, d, m);
        } else {
            a = c;
            b = d;
        }
    }
    return {m, k, a, sub(add(b, b, m), a, m)};
}

FibLucasStream::FibLucasStream(std::uint64_t m)
    : cur_{m, 0, 0, 2 % m}, f_next_(1 % m), l_next_(1 % m) {}

const FibPair& FibLucasStream::next() {
    const std::uint64_t m = cur_.modulus;
    const std::uint64_t f2 = add(cur_.f, f_next_, m);
    const std::uint64_t l2 = add(cur_.l, l_next_, m);
    cur_ = {m, cur_.k + 1, f_next_, l_next_};
    f_next_ = f2;
    l_next_ = l2;
    return cur_;
}

}  // namespace supercong
