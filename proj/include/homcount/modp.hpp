#pragma once

#include <cstdint>
#include <optional>

namespace homcount::modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

// Lift a residue to the symmetric range (-p/2, p/2].
inline long long symmetric_lift(std::uint64_t a, std::uint64_t p) {
    if (a * 2 > p) return static_cast<long long>(a) - static_cast<long long>(p);
    return static_cast<long long>(a);
}

bool is_prime(std::uint64_t n);

// Smallest prime p with p ≡ 1 (mod modulus) and p > lower_bound, scanning at
// most max_candidates arithmetic-progression terms.
std::optional<std::uint64_t> find_prime_in_progression(std::uint64_t modulus,
                                                       std::uint64_t lower_bound,
                                                       std::uint64_t max_candidates = 10'000'000);

} // namespace homcount::modp
