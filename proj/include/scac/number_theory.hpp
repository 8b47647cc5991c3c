#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scac::nt {

/// (prime, exponent) pairs in ascending prime order.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

/// Trial division; lengths in this library are desk-scale.
inline Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        f.emplace_back(p, r);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p prime with (p-1)/2 also prime.
inline bool is_safe_prime(std::int64_t p) { return p > 2 && is_prime(p) && is_prime((p - 1) / 2); }

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (auto [p, r] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Multiplicative order e_n and suborder c_n of 2 modulo an odd n > 2:
/// the least e >= 1 with 2^e = 1 and the least c >= 1 with 2^c = +-1 (mod n).
struct OrderPair {
    std::int64_t n = 0;
    std::int64_t e = 0;
    std::int64_t c = 0;
};

inline OrderPair orders(std::int64_t n) {
    if (n <= 2 || n % 2 == 0) throw std::invalid_argument("orders: n must be odd and greater than 2");
    OrderPair o{n, 0, 0};
    std::int64_t x = 1;
    for (std::int64_t k = 1;; ++k) {
        x = (x * 2) % n;
        if (o.c == 0 && (x == 1 || x == n - 1)) o.c = k;
        if (x == 1) {
            o.e = k;
            return o;
        }
    }
}

/// (p = 5 mod 8) or (p = 1 mod 8 and 4 | e_p). For an odd prime p this is
/// exactly the case N_odd(p) = 0, i.e. every cycle of G(p) has even length.
inline bool even_cycle_prime(std::int64_t p) {
    if (p % 8 == 5) return true;
    return p % 8 == 1 && orders(p).e % 4 == 0;
}

}  // namespace scac::nt
