// GF(p^e) realized over its additive group Z_p x ... x Z_p. Field elements
// are additive indices; coefficient i of the polynomial representation is
// coordinate i. Two deterministic choices make every output reproducible:
// the modulus is the lexicographically least monic irreducible of degree e
// (coefficients compared constant term first, irreducibility established by
// brute-force trial division), and the primitive element is the least
// additive index of full multiplicative order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edf/group.hpp"
#include "edf/numtheory.hpp"

namespace edf {

class FiniteField {
  public:
    explicit FiniteField(std::uint32_t q)
        : additive_(std::vector<std::uint32_t>{2}) {  // placeholder, replaced below
        auto pp = prime_power_decompose(q);
        if (!pp) throw std::invalid_argument("field order must be a prime power");
        p_ = static_cast<std::uint32_t>(pp->first);
        e_ = pp->second;
        q_ = q;
        additive_ = FiniteAbelianGroup(std::vector<std::uint32_t>(e_, p_));
        modulus_ = find_modulus();
        primitive_ = find_primitive();
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t order() const { return q_; }
    const FiniteAbelianGroup& additive_group() const { return additive_; }
    // Monic, length degree+1, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    GroupElement primitive_element() const { return primitive_; }

    GroupElement zero() const { return 0; }
    GroupElement one() const { return one_; }

    GroupElement add(GroupElement a, GroupElement b) const { return additive_.add(a, b); }
    GroupElement neg(GroupElement a) const { return additive_.negate(a); }
    GroupElement sub(GroupElement a, GroupElement b) const { return additive_.sub(a, b); }

    GroupElement mul(GroupElement a, GroupElement b) const {
        if (a >= q_ || b >= q_) throw std::out_of_range("field element out of range");
        if (e_ == 1) return static_cast<GroupElement>(std::uint64_t(a) * b % p_);
        std::vector<std::uint32_t> ca = additive_.decode(a), cb = additive_.decode(b);
        std::vector<std::uint64_t> t(2 * std::size_t(e_) - 1, 0);
        for (std::size_t i = 0; i < e_; ++i)
            for (std::size_t j = 0; j < e_; ++j) t[i + j] += std::uint64_t(ca[i]) * cb[j];
        // reduce by the monic modulus, highest degree first
        for (std::size_t i = t.size(); i-- > e_;) {
            std::uint64_t c = t[i] % p_;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= e_; ++j) {
                std::size_t idx = i - e_ + j;
                t[idx] = (t[idx] % p_ + p_ - c * modulus_[j] % p_) % p_;
            }
        }
        std::vector<std::uint32_t> res(e_);
        for (std::size_t i = 0; i < e_; ++i) res[i] = static_cast<std::uint32_t>(t[i] % p_);
        return additive_.encode(res);
    }

    GroupElement pow(GroupElement a, std::uint64_t exp) const {
        GroupElement result = one_, base = a;
        while (exp > 0) {
            if (exp & 1) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

    std::uint64_t multiplicative_order(GroupElement a) const {
        if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
        std::uint64_t ord = q_ - 1;
        for (auto [r, _] : prime_factorization(q_ - 1))
            while (ord % r == 0 && pow(a, ord / r) == one_) ord /= r;
        return ord;
    }

    // Polynomial coefficients, constant term first.
    std::vector<std::uint32_t> coefficients(GroupElement a) const { return additive_.decode(a); }
    GroupElement from_coefficients(std::span<const std::uint32_t> c) const { return additive_.encode(c); }

  private:
    // True iff the monic polynomial f (constant term first) has no monic
    // divisor of degree 1..deg(f)/2 over Z_p.
    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
        for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
            std::vector<std::uint32_t> g(d + 1, 0);
            g[d] = 1;
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::uint64_t v = idx;
                for (std::size_t i = d; i-- > 0;) {
                    g[i] = static_cast<std::uint32_t>(v % p_);
                    v /= p_;
                }
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& f) const {
        std::vector<std::uint32_t> r = f;  // long division remainder; g is monic
        std::size_t dg = g.size() - 1;
        for (std::size_t i = r.size(); i-- > dg;) {
            std::uint32_t c = r[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dg; ++j) {
                std::size_t idx = i - dg + j;
                r[idx] = static_cast<std::uint32_t>((r[idx] + std::uint64_t(p_ - c) * g[j]) % p_);
            }
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (r[i] != 0) return false;
        return true;
    }

    std::vector<std::uint32_t> find_modulus() const {
        if (e_ == 1) return {0, 1};  // x itself
        std::vector<std::uint32_t> cand(e_ + 1, 0);
        cand[e_] = 1;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < e_; ++i) total *= p_;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = e_; i-- > 0;) {  // constant term ends up most significant
                cand[i] = static_cast<std::uint32_t>(v % p_);
                v /= p_;
            }
            if (poly_irreducible(cand)) return cand;
        }
        throw std::logic_error("no irreducible polynomial found");  // cannot happen
    }

    GroupElement find_primitive() {
        std::vector<std::uint32_t> one_coeffs(e_, 0);
        one_coeffs[0] = 1;
        one_ = additive_.encode(one_coeffs);
        auto fac = prime_factorization(std::uint64_t(q_) - 1);
        for (GroupElement g = 1; g < q_; ++g) {
            bool primitive = true;
            for (auto [r, _] : fac)
                if (pow(g, (q_ - 1) / r) == one_) {
                    primitive = false;
                    break;
                }
            if (primitive) return g;
        }
        throw std::logic_error("no primitive element found");  // cannot happen
    }

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    FiniteAbelianGroup additive_;
    std::vector<std::uint32_t> modulus_;
    GroupElement primitive_ = 0;
    GroupElement one_ = 0;
};

inline FiniteField build_field(std::uint32_t q) { return FiniteField(q); }

// The (q-1)/2 nonzero squares as additive indices, sorted. Defined for odd q.
inline std::vector<GroupElement> squares(const FiniteField& f) {
    if (f.order() % 2 == 0) throw std::invalid_argument("squares require an odd field order");
    std::vector<GroupElement> out;
    out.reserve((f.order() - 1) / 2);
    const GroupElement alpha_sq = f.mul(f.primitive_element(), f.primitive_element());
    GroupElement x = f.one();
    for (std::uint32_t i = 0; i < (f.order() - 1) / 2; ++i) {
        x = f.mul(x, alpha_sq);
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// "GF(<int>)", case-insensitive.
inline std::uint32_t parse_field_spec(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("field spec: expected GF(<int>) in \"" + std::string(s) + "\""); };
    if (s.size() < 5) fail();
    if ((s[0] != 'G' && s[0] != 'g') || (s[1] != 'F' && s[1] != 'f') || s[2] != '(' || s.back() != ')') fail();
    std::uint64_t v = 0;
    for (std::size_t i = 3; i + 1 < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (v > max_group_order) throw std::invalid_argument("field spec: order exceeds the 2^20 cap");
    }
    if (v < 2) throw std::invalid_argument("field spec: order must be at least 2");
    return static_cast<std::uint32_t>(v);
}

}  // namespace edf
