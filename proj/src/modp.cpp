#include "homcount/modp.hpp"

namespace homcount::modp {

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit integers.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<std::uint64_t> find_prime_in_progression(std::uint64_t modulus,
                                                       std::uint64_t lower_bound,
                                                       std::uint64_t max_candidates) {
    if (modulus == 0) return std::nullopt;
    // first candidate ≡ 1 (mod modulus) strictly above lower_bound
    std::uint64_t k = lower_bound / modulus + 1;
    std::uint64_t candidate = k * modulus + 1;
    while (candidate <= lower_bound) candidate += modulus;
    for (std::uint64_t i = 0; i < max_candidates; ++i, candidate += modulus) {
        if (is_prime(candidate)) return candidate;
    }
    return std::nullopt;
}

} // namespace homcount::modp
