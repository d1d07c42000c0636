// Finite abelian groups as explicit direct products Z_{n1} x ... x Z_{nr}.
// Elements are dense indices 0..n-1 in mixed-radix order with the first
// factor most significant; index 0 is the identity. Factor lists are taken
// literally: Z6 and Z2xZ3 are isomorphic but distinct objects.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edf/numtheory.hpp"

namespace edf {

using GroupElement = std::uint32_t;

// Dense per-element tallies must stay comfortably in memory.
inline constexpr std::uint32_t max_group_order = 1u << 20;

class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
        std::uint64_t n = 1;
        for (std::uint32_t f : factors_) {
            if (f < 2) throw std::invalid_argument("cyclic factor must be at least 2");
            n *= f;
            if (n > max_group_order) throw std::invalid_argument("group order exceeds the 2^20 cap");
        }
        order_ = static_cast<std::uint32_t>(n);
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * factors_[i + 1];
    }

    std::uint32_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }
    const std::vector<std::uint32_t>& factors() const { return factors_; }
    bool single_factor() const { return factors_.size() == 1; }
    GroupElement identity() const { return 0; }

    GroupElement add(GroupElement a, GroupElement b) const {
        check(a);
        check(b);
        GroupElement r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::uint32_t s = digit(a, i) + digit(b, i);
            if (s >= factors_[i]) s -= factors_[i];
            r += s * strides_[i];
        }
        return r;
    }

    GroupElement negate(GroupElement a) const {
        check(a);
        GroupElement r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::uint32_t d = digit(a, i);
            r += (d == 0 ? 0 : factors_[i] - d) * strides_[i];
        }
        return r;
    }

    GroupElement sub(GroupElement a, GroupElement b) const {
        check(a);
        check(b);
        GroupElement r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::uint32_t da = digit(a, i), db = digit(b, i);
            r += (da >= db ? da - db : da + factors_[i] - db) * strides_[i];
        }
        return r;
    }

    GroupElement encode(std::span<const std::uint32_t> coords) const {
        if (coords.size() != factors_.size())
            throw std::invalid_argument("coordinate arity does not match group rank");
        GroupElement r = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] >= factors_[i]) throw std::out_of_range("coordinate out of range");
            r += coords[i] * strides_[i];
        }
        return r;
    }

    std::vector<std::uint32_t> decode(GroupElement a) const {
        check(a);
        std::vector<std::uint32_t> c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = digit(a, i);
        return c;
    }

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

  private:
    void check(GroupElement a) const {
        if (a >= order_) throw std::out_of_range("group element index out of range");
    }
    std::uint32_t digit(GroupElement a, std::size_t i) const { return (a / strides_[i]) % factors_[i]; }

    std::vector<std::uint32_t> factors_;
    std::vector<std::uint32_t> strides_;
    std::uint32_t order_ = 0;
};

// Grammar: Z<int>(xZ<int>)*, case-insensitive, every factor >= 2.
inline FiniteAbelianGroup parse_group(std::string_view spec) {
    std::vector<std::uint32_t> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z' && spec[pos] != 'z')
            throw std::invalid_argument("group spec: expected 'Z' in \"" + std::string(spec) + "\"");
        ++pos;
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(spec[pos] - '0');
            if (v > max_group_order) throw std::invalid_argument("group spec: factor exceeds the 2^20 cap");
            ++pos;
        }
        if (pos == start) throw std::invalid_argument("group spec: missing factor size");
        if (v < 2) throw std::invalid_argument("group spec: factor must be at least 2");
        factors.push_back(static_cast<std::uint32_t>(v));
        if (pos == spec.size()) break;
        if (spec[pos] != 'x' && spec[pos] != 'X')
            throw std::invalid_argument("group spec: expected 'x' between factors");
        ++pos;
        if (pos == spec.size()) throw std::invalid_argument("group spec: trailing separator");
    }
    if (factors.empty()) throw std::invalid_argument("group spec: empty");
    return FiniteAbelianGroup(std::move(factors));
}

inline std::string format_group(const FiniteAbelianGroup& g) {
    std::string s;
    for (std::size_t i = 0; i < g.factors().size(); ++i) {
        if (i) s += 'x';
        s += 'Z';
        s += std::to_string(g.factors()[i]);
    }
    return s;
}

// Sorted multiset of prime-power orders obtained by CRT-splitting every
// factor. Two groups are isomorphic iff these multisets coincide.
inline std::vector<std::uint32_t> primary_decomposition(const FiniteAbelianGroup& g) {
    std::vector<std::uint32_t> parts;
    for (std::uint32_t f : g.factors())
        for (auto [p, e] : prime_factorization(f)) {
            std::uint32_t q = 1;
            for (std::uint32_t i = 0; i < e; ++i) q *= static_cast<std::uint32_t>(p);
            parts.push_back(q);
        }
    std::sort(parts.begin(), parts.end());
    return parts;
}

inline bool isomorphic(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return primary_decomposition(a) == primary_decomposition(b);
}

namespace detail {
inline std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    // parts in non-increasing order
    auto rec = [&](auto&& self, std::uint32_t rest, std::uint32_t maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}
}  // namespace detail

// Every abelian group of order n up to isomorphism, one representative each,
// factors listed as prime powers (primes ascending, exponents descending).
inline std::vector<FiniteAbelianGroup> abelian_group_shapes(std::uint32_t n) {
    if (n < 2 || n > max_group_order) throw std::invalid_argument("order out of range");
    std::vector<std::vector<std::uint32_t>> shapes{{}};
    for (auto [p, e] : prime_factorization(n)) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& partition : detail::partitions_of(e)) {
            std::vector<std::uint32_t> powers;
            for (std::uint32_t part : partition) {
                std::uint64_t q = 1;
                for (std::uint32_t i = 0; i < part; ++i) q *= p;
                powers.push_back(static_cast<std::uint32_t>(q));
            }
            for (const auto& prefix : shapes) {
                auto combined = prefix;
                combined.insert(combined.end(), powers.begin(), powers.end());
                next.push_back(std::move(combined));
            }
        }
        shapes = std::move(next);
    }
    std::vector<FiniteAbelianGroup> out;
    out.reserve(shapes.size());
    for (auto& f : shapes) out.emplace_back(std::move(f));
    return out;
}

}  // namespace edf
