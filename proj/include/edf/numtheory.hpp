// Trial-division number theory. Orders in this library are capped at 2^20,
// so nothing cleverer than trial division is warranted.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace edf {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_factorization(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// q = p^e with p prime and e >= 1, or nothing.
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factorization(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline bool is_prime_power(std::uint64_t q) { return prime_power_decompose(q).has_value(); }

}  // namespace edf
