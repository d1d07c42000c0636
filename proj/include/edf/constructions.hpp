// Deterministic builders for the explicit families: the two lambda=1 series,
// the cyclotomic half-and-half SEDF, Paley line-union PDSs, the PDS
// complement, the PDS-pair SEDF, and the two variable-size examples. Every
// builder re-verifies its own output before returning it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "edf/diffcore.hpp"
#include "edf/field.hpp"
#include "edf/group.hpp"

namespace edf {

struct GroupSubset {
    FiniteAbelianGroup group;
    std::vector<GroupElement> elements;
};

struct ConstructionDescriptor {
    enum class Kind {
        exponential,
        singleton,
        cyclotomic_half,
        paley_lines,
        pds_complement,
        pds_to_sedf,
        gsedf_two_set,
        gsedf_z7,
    };
    Kind kind;
    std::vector<std::uint64_t> parameters;
};

inline std::string to_string(const ConstructionDescriptor& d) {
    std::string name;
    switch (d.kind) {
        case ConstructionDescriptor::Kind::exponential: name = "exponential_sedf"; break;
        case ConstructionDescriptor::Kind::singleton: name = "singleton_sedf"; break;
        case ConstructionDescriptor::Kind::cyclotomic_half: name = "cyclotomic_half_sedf"; break;
        case ConstructionDescriptor::Kind::paley_lines: name = "paley_lines_pds"; break;
        case ConstructionDescriptor::Kind::pds_complement: name = "pds_complement"; break;
        case ConstructionDescriptor::Kind::pds_to_sedf: name = "paley_pds_to_sedf"; break;
        case ConstructionDescriptor::Kind::gsedf_two_set: name = "gsedf_two_set"; break;
        case ConstructionDescriptor::Kind::gsedf_z7: name = "gsedf_z7"; break;
    }
    if (d.parameters.empty()) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < d.parameters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d.parameters[i]);
    }
    return s + ")";
}

namespace detail {
inline void require_sedf(const SetFamily& fam, std::uint32_t k, std::uint32_t lambda, const char* what) {
    SedfVerdict v = verify_sedf(fam);
    if (!v.is_sedf || v.k != k || v.lambda != lambda)
        throw std::logic_error(std::string(what) + ": construction failed self-verification");
}
}  // namespace detail

// A1 = {0..k-1}, A2 = {k, 2k, ..., k^2} in Z_{k^2+1}; a (k^2+1,2,k,1)-SEDF.
inline SetFamily exponential_sedf(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("exponential_sedf needs k >= 1");
    const std::uint64_t n = std::uint64_t(k) * k + 1;
    if (n > max_group_order) throw std::invalid_argument("exponential_sedf order exceeds the 2^20 cap");
    SetFamily fam{FiniteAbelianGroup({static_cast<std::uint32_t>(n)}), {{}, {}}};
    for (std::uint32_t i = 0; i < k; ++i) fam.sets[0].push_back(i);
    for (std::uint32_t i = 1; i <= k; ++i) fam.sets[1].push_back(i * k);
    detail::require_sedf(fam, k, 1, "exponential_sedf");
    return fam;
}

// All n singletons {0},...,{n-1} in Z_n; an (n,n,1,1)-SEDF. n sets, not the
// n-1 the obvious listing {i} for 1 <= i <= n-1 would give: that family
// misses multiplicity at one element and fails verification.
inline SetFamily singleton_sedf(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("singleton_sedf needs n >= 2");
    if (n > max_group_order) throw std::invalid_argument("singleton_sedf order exceeds the 2^20 cap");
    SetFamily fam{FiniteAbelianGroup({n}), {}};
    for (std::uint32_t i = 0; i < n; ++i) fam.sets.push_back({i});
    detail::require_sedf(fam, 1, 1, "singleton_sedf");
    return fam;
}

// A1 = squares of GF(q), A2 = nonsquares, in the additive group; a
// (q,2,(q-1)/2,(q-1)/4)-SEDF for prime powers q = 1 mod 4.
inline SetFamily cyclotomic_half_sedf(std::uint32_t q) {
    if (!is_prime_power(q)) throw std::invalid_argument("cyclotomic_half_sedf needs a prime power");
    if (q % 4 != 1) throw std::invalid_argument("cyclotomic_half_sedf needs q = 1 mod 4");
    FiniteField f(q);
    std::vector<GroupElement> sq = squares(f);
    std::vector<bool> is_sq(q, false);
    for (GroupElement x : sq) is_sq[x] = true;
    std::vector<GroupElement> nonsq;
    nonsq.reserve((q - 1) / 2);
    for (GroupElement x = 1; x < q; ++x)
        if (!is_sq[x]) nonsq.push_back(x);
    SetFamily fam{f.additive_group(), {std::move(sq), std::move(nonsq)}};
    detail::require_sedf(fam, (q - 1) / 2, (q - 1) / 4, "cyclotomic_half_sedf");
    return fam;
}

inline constexpr std::uint32_t slope_infinity = static_cast<std::uint32_t>(-1);

// Union of (q+1)/2 distinct lines through the origin of GF(q)^2, origin
// removed: a Paley-type (q^2, (q^2-1)/2, (q^2-5)/4, (q^2-1)/4) PDS in the
// additive group. Slopes are field elements 0..q-1 plus slope_infinity; the
// default takes (inf, 0, 1, ...) so output is reproducible.
inline GroupSubset paley_lines_pds(std::uint32_t q, std::vector<std::uint32_t> line_slopes = {}) {
    if (!is_prime_power(q) || q % 2 == 0) throw std::invalid_argument("paley_lines_pds needs an odd prime power");
    const std::uint32_t want = (q + 1) / 2;
    if (line_slopes.empty()) {
        line_slopes.push_back(slope_infinity);
        for (std::uint32_t s = 0; s + 1 < want; ++s) line_slopes.push_back(s);
    }
    if (line_slopes.size() != want) throw std::invalid_argument("paley_lines_pds needs exactly (q+1)/2 slopes");
    for (std::uint32_t s : line_slopes)
        if (s != slope_infinity && s >= q) throw std::invalid_argument("slope out of range");
    {
        auto sorted = line_slopes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("paley_lines_pds slopes must be distinct");
    }

    FiniteField f(q);
    const std::uint32_t p = f.characteristic(), e = f.degree();
    FiniteAbelianGroup plane(std::vector<std::uint32_t>(2 * std::size_t(e), p));
    auto point = [&](GroupElement x, GroupElement y) {
        std::vector<std::uint32_t> coords = f.coefficients(x);
        std::vector<std::uint32_t> cy = f.coefficients(y);
        coords.insert(coords.end(), cy.begin(), cy.end());
        return plane.encode(coords);
    };

    std::vector<GroupElement> d;
    for (std::uint32_t s : line_slopes)
        for (GroupElement t = 1; t < q; ++t)
            d.push_back(s == slope_infinity ? point(0, t) : point(t, f.mul(s, t)));
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
        throw std::logic_error("paley_lines_pds: lines met off the origin");

    PdsVerdict v = verify_pds(d, plane);
    if (!v.paley_type) throw std::logic_error("paley_lines_pds: construction failed self-verification");
    return GroupSubset{std::move(plane), std::move(d)};
}

namespace detail {
inline PdsVerdict require_paley(const GroupSubset& s, const char* what) {
    PdsVerdict v = verify_pds(s.elements, s.group);
    if (!v.paley_type) throw std::invalid_argument(std::string(what) + ": input is not a Paley-type PDS");
    return v;
}
}  // namespace detail

// G* minus a Paley PDS is again a Paley PDS with the same parameters.
inline GroupSubset pds_complement(const GroupSubset& d) {
    PdsVerdict in = detail::require_paley(d, "pds_complement");
    std::vector<bool> member(d.group.order(), false);
    for (GroupElement x : d.elements) member[x] = true;
    std::vector<GroupElement> out;
    out.reserve(d.group.order() - 1 - d.elements.size());
    for (GroupElement x = 1; x < d.group.order(); ++x)
        if (!member[x]) out.push_back(x);
    PdsVerdict v = verify_pds(out, d.group);
    if (!v.paley_type || v.params.lambda != in.params.lambda || v.params.mu != in.params.mu ||
        v.params.k != in.params.k)
        throw std::logic_error("pds_complement: complement failed self-verification");
    return GroupSubset{d.group, std::move(out)};
}

// {D, G* \ D} for a Paley PDS D: a (v, 2, (v-1)/2, (v-1)/4)-SEDF.
inline SetFamily paley_pds_to_sedf(const GroupSubset& d) {
    detail::require_paley(d, "paley_pds_to_sedf");
    GroupSubset comp = pds_complement(d);
    std::vector<GroupElement> first = d.elements;
    std::sort(first.begin(), first.end());
    SetFamily fam{d.group, {std::move(first), std::move(comp.elements)}};
    const std::uint32_t v = d.group.order();
    detail::require_sedf(fam, (v - 1) / 2, (v - 1) / 4, "paley_pds_to_sedf");
    return fam;
}

// {0}, {1,...,n-1} in Z_n: an (n,2;1,n-1;1,1)-GSEDF.
inline SetFamily gsedf_two_set(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("gsedf_two_set needs n >= 2");
    if (n > max_group_order) throw std::invalid_argument("gsedf_two_set order exceeds the 2^20 cap");
    SetFamily fam{FiniteAbelianGroup({n}), {{0}, {}}};
    for (std::uint32_t i = 1; i < n; ++i) fam.sets[1].push_back(i);
    GsedfVerdict v = verify_gsedf(fam);
    if (!v.is_gsedf || v.lambdas != std::vector<std::uint32_t>{1, 1})
        throw std::logic_error("gsedf_two_set: construction failed self-verification");
    return fam;
}

// {1},{2},{4},{0,3,5,6} in Z_7: a (7,4;1,1,1,4;1,1,1,2)-GSEDF.
inline SetFamily gsedf_z7() {
    SetFamily fam{FiniteAbelianGroup({7}), {{1}, {2}, {4}, {0, 3, 5, 6}}};
    GsedfVerdict v = verify_gsedf(fam);
    if (!v.is_gsedf || v.lambdas != std::vector<std::uint32_t>{1, 1, 1, 2})
        throw std::logic_error("gsedf_z7: construction failed self-verification");
    return fam;
}

inline std::vector<SetFamily> gsedf_examples(std::uint32_t n) { return {gsedf_two_set(n), gsedf_z7()}; }

// Builds the family a classification witness promises. Only meaningful for
// descriptors that stand alone; the PDS-input kinds need a concrete set.
inline SetFamily build_witness(const ConstructionDescriptor& d) {
    using Kind = ConstructionDescriptor::Kind;
    auto param = [&](std::size_t i) {
        if (i >= d.parameters.size()) throw std::invalid_argument("descriptor is missing a parameter");
        return d.parameters[i];
    };
    switch (d.kind) {
        case Kind::exponential: return exponential_sedf(static_cast<std::uint32_t>(param(0)));
        case Kind::singleton: return singleton_sedf(static_cast<std::uint32_t>(param(0)));
        case Kind::cyclotomic_half: return cyclotomic_half_sedf(static_cast<std::uint32_t>(param(0)));
        case Kind::paley_lines:
            return paley_pds_to_sedf(paley_lines_pds(static_cast<std::uint32_t>(param(0))));
        case Kind::gsedf_two_set: return gsedf_two_set(static_cast<std::uint32_t>(param(0)));
        case Kind::gsedf_z7: return gsedf_z7();
        case Kind::pds_complement:
        case Kind::pds_to_sedf: break;
    }
    throw std::invalid_argument("descriptor does not name a standalone construction");
}

}  // namespace edf
