// Difference multiset tallies and the EDF/SEDF/GSEDF/PDS verifiers.
// Tallies are dense count vectors indexed by group element. Verdicts carry
// the first offending tally entry so callers get cheap diagnostics.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edf/group.hpp"

namespace edf {

// Ordered list of pairwise disjoint element subsets of one group.
struct SetFamily {
    FiniteAbelianGroup group;
    std::vector<std::vector<GroupElement>> sets;
};

inline void validate_family(const SetFamily& fam) {
    if (fam.sets.empty()) throw std::invalid_argument("family needs at least one set");
    std::vector<bool> seen(fam.group.order(), false);
    for (const auto& s : fam.sets)
        for (GroupElement e : s) {
            if (e >= fam.group.order()) throw std::out_of_range("family element out of range");
            if (seen[e]) throw std::invalid_argument("family sets are not pairwise disjoint");
            seen[e] = true;
        }
}

struct DifferenceTally {
    FiniteAbelianGroup group;
    std::vector<std::uint32_t> counts;  // length group.order()

    std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }
};

// counts[d] = #{(x,y) in A x B : x - y = d}. A and B must be disjoint.
inline DifferenceTally difference_tally(const FiniteAbelianGroup& g, const std::vector<GroupElement>& a,
                                        const std::vector<GroupElement>& b) {
    std::vector<bool> in_a(g.order(), false);
    for (GroupElement x : a) {
        if (x >= g.order()) throw std::out_of_range("element out of range");
        in_a[x] = true;
    }
    for (GroupElement y : b) {
        if (y >= g.order()) throw std::out_of_range("element out of range");
        if (in_a[y]) throw std::invalid_argument("difference_tally requires disjoint sets");
    }
    DifferenceTally t{g, std::vector<std::uint32_t>(g.order(), 0)};
    for (GroupElement x : a)
        for (GroupElement y : b) ++t.counts[g.sub(x, y)];
    return t;
}

// Sum of difference_tally(A_i, A_j) over all j != i.
inline DifferenceTally external_tally(const SetFamily& fam, std::size_t i) {
    validate_family(fam);
    if (i >= fam.sets.size()) throw std::out_of_range("set index out of range");
    const auto& g = fam.group;
    DifferenceTally t{g, std::vector<std::uint32_t>(g.order(), 0)};
    for (std::size_t j = 0; j < fam.sets.size(); ++j) {
        if (j == i) continue;
        for (GroupElement x : fam.sets[i])
            for (GroupElement y : fam.sets[j]) ++t.counts[g.sub(x, y)];
    }
    return t;
}

// Multiset {d1 - d2 : d1, d2 in D, d1 != d2}.
inline DifferenceTally internal_tally(const std::vector<GroupElement>& d, const FiniteAbelianGroup& g) {
    std::vector<bool> seen(g.order(), false);
    for (GroupElement x : d) {
        if (x >= g.order()) throw std::out_of_range("element out of range");
        if (seen[x]) throw std::invalid_argument("internal_tally requires a set without repeats");
        seen[x] = true;
    }
    DifferenceTally t{g, std::vector<std::uint32_t>(g.order(), 0)};
    for (GroupElement x : d)
        for (GroupElement y : d)
            if (x != y) ++t.counts[g.sub(x, y)];
    return t;
}

// First tally entry that breaks a constancy requirement. set_index is the
// set whose external tally is off, or npos for a pooled/internal tally.
struct TallyDefect {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t set_index = npos;
    GroupElement element = 0;
    std::uint32_t count = 0;
    std::uint32_t expected = 0;
};

struct SedfVerdict {
    bool is_sedf = false;
    std::uint32_t k = 0;
    std::uint32_t lambda = 0;
    std::optional<TallyDefect> defect;
    std::string reason;  // empty when is_sedf
};

namespace detail {
// Checks that counts is 0 at the identity and constant on the rest;
// reports that constant or the first defect. Disjointness makes a nonzero
// identity entry impossible; it is still asserted.
inline bool constant_off_identity(const std::vector<std::uint32_t>& counts, std::size_t set_index,
                                  std::uint32_t& value, std::optional<TallyDefect>& defect) {
    if (counts[0] != 0) throw std::logic_error("identity element carries a nonzero external tally");
    value = counts.size() > 1 ? counts[1] : 0;
    for (std::size_t d = 1; d < counts.size(); ++d)
        if (counts[d] != value) {
            defect = TallyDefect{set_index, static_cast<GroupElement>(d), counts[d], value};
            return false;
        }
    return true;
}
}  // namespace detail

// Definition check: m >= 2 disjoint k-subsets whose per-set external
// differences cover each nonzero element exactly lambda times.
inline SedfVerdict verify_sedf(const SetFamily& fam) {
    validate_family(fam);
    if (fam.sets.size() < 2) throw std::invalid_argument("verify_sedf needs at least 2 sets");
    SedfVerdict v;
    const std::size_t k = fam.sets.front().size();
    if (k == 0) {
        v.reason = "sets must be nonempty";
        return v;
    }
    for (const auto& s : fam.sets)
        if (s.size() != k) {
            v.reason = "sets do not share a single size";
            return v;
        }
    v.k = static_cast<std::uint32_t>(k);
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
        DifferenceTally t = external_tally(fam, i);
        std::uint32_t lambda_i = 0;
        if (!detail::constant_off_identity(t.counts, i, lambda_i, v.defect)) {
            v.reason = "external tally is not constant";
            return v;
        }
        if (i == 0) {
            v.lambda = lambda_i;
        } else if (lambda_i != v.lambda) {
            v.defect = TallyDefect{i, 1, lambda_i, v.lambda};
            v.reason = "per-set multiplicities differ";
            return v;
        }
    }
    if (v.lambda == 0) {
        v.reason = "external differences are empty";
        return v;
    }
    v.is_sedf = true;
    return v;
}

struct EdfVerdict {
    bool is_edf = false;
    std::uint32_t k = 0;
    std::uint32_t lambda = 0;  // pooled multiplicity
    std::optional<TallyDefect> defect;
    std::string reason;
};

// Definition check with the tallies pooled over every ordered pair i != j.
inline EdfVerdict verify_edf(const SetFamily& fam) {
    validate_family(fam);
    if (fam.sets.size() < 2) throw std::invalid_argument("verify_edf needs at least 2 sets");
    EdfVerdict v;
    const std::size_t k = fam.sets.front().size();
    if (k == 0) {
        v.reason = "sets must be nonempty";
        return v;
    }
    for (const auto& s : fam.sets)
        if (s.size() != k) {
            v.reason = "sets do not share a single size";
            return v;
        }
    v.k = static_cast<std::uint32_t>(k);
    const auto& g = fam.group;
    std::vector<std::uint32_t> counts(g.order(), 0);
    for (std::size_t i = 0; i < fam.sets.size(); ++i)
        for (std::size_t j = 0; j < fam.sets.size(); ++j) {
            if (i == j) continue;
            for (GroupElement x : fam.sets[i])
                for (GroupElement y : fam.sets[j]) ++counts[g.sub(x, y)];
        }
    if (!detail::constant_off_identity(counts, TallyDefect::npos, v.lambda, v.defect)) {
        v.reason = "pooled external tally is not constant";
        return v;
    }
    if (v.lambda == 0) {
        v.reason = "external differences are empty";
        return v;
    }
    v.is_edf = true;
    return v;
}

struct GsedfVerdict {
    bool is_gsedf = false;
    std::vector<std::uint32_t> lambdas;  // one per set when is_gsedf
    std::optional<TallyDefect> defect;
    std::string reason;
};

// Variable set sizes; each set's external tally must be its own constant.
inline GsedfVerdict verify_gsedf(const SetFamily& fam) {
    validate_family(fam);
    if (fam.sets.size() < 2) throw std::invalid_argument("verify_gsedf needs at least 2 sets");
    GsedfVerdict v;
    for (const auto& s : fam.sets)
        if (s.empty()) {
            v.reason = "sets must be nonempty";
            return v;
        }
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
        DifferenceTally t = external_tally(fam, i);
        std::uint32_t lambda_i = 0;
        if (!detail::constant_off_identity(t.counts, i, lambda_i, v.defect)) {
            v.reason = "external tally is not constant";
            v.lambdas.clear();
            return v;
        }
        v.lambdas.push_back(lambda_i);
    }
    v.is_gsedf = true;
    return v;
}

struct PdsParams {
    std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
};

struct PdsVerdict {
    bool is_pds = false;
    PdsParams params;
    bool regular = false;
    bool paley_type = false;
    std::optional<TallyDefect> defect;
    std::string reason;
};

// Internal-difference check: members of D hit lambda times, nonmembers mu
// times (identity ignored on both sides). Regular = identity-free and
// negation-closed; Paley type = regular with parameters
// (v, (v-1)/2, (v-5)/4, (v-1)/4) and v = 1 mod 4.
inline PdsVerdict verify_pds(const std::vector<GroupElement>& d, const FiniteAbelianGroup& g) {
    DifferenceTally t = internal_tally(d, g);  // validates indices and repeats
    std::vector<bool> member(g.order(), false);
    for (GroupElement x : d) member[x] = true;

    PdsVerdict v;
    v.params.v = g.order();
    v.params.k = d.size();

    bool have_lambda = false, have_mu = false;
    for (GroupElement x = 1; x < g.order(); ++x) {
        std::uint32_t c = t.counts[x];
        if (member[x]) {
            if (!have_lambda) {
                v.params.lambda = c;
                have_lambda = true;
            } else if (c != v.params.lambda) {
                v.defect = TallyDefect{TallyDefect::npos, x, c, static_cast<std::uint32_t>(v.params.lambda)};
                v.reason = "internal tally is not constant on members";
                return v;
            }
        } else {
            if (!have_mu) {
                v.params.mu = c;
                have_mu = true;
            } else if (c != v.params.mu) {
                v.defect = TallyDefect{TallyDefect::npos, x, c, static_cast<std::uint32_t>(v.params.mu)};
                v.reason = "internal tally is not constant on nonmembers";
                return v;
            }
        }
    }
    v.is_pds = true;

    v.regular = !member[0];
    if (v.regular)
        for (GroupElement x : d)
            if (!member[g.negate(x)]) {
                v.regular = false;
                break;
            }

    v.paley_type = v.regular && v.params.v % 4 == 1 && v.params.k == (v.params.v - 1) / 2 &&
                   v.params.lambda == (v.params.v - 5) / 4 && v.params.mu == (v.params.v - 1) / 4;
    return v;
}

}  // namespace edf
