// Exact-arithmetic feasibility rules for SEDF/GSEDF parameter sets. Every
// comparison cross-multiplies integers; nothing here touches floating point.
// Rules distinguish "fail" from "not applicable" so the classifier can tell
// a substantive pass from a vacuous one.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edf/constructions.hpp"
#include "edf/numtheory.hpp"

namespace edf {

struct SedfParams {
    std::uint64_t n = 0, m = 0, k = 0, lambda = 0;
};

struct GsedfParams {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> ks;
    std::vector<std::uint64_t> lambdas;

    std::size_t m() const { return ks.size(); }
    std::uint64_t K() const {
        std::uint64_t s = 0;
        for (auto k : ks) s += k;
        return s;
    }
    std::uint64_t Lambda() const {
        std::uint64_t s = 0;
        for (auto l : lambdas) s += l;
        return s;
    }
};

enum class RuleStatus { pass, fail, not_applicable };

enum class Rule {
    counting,
    packing,
    lambda_bound,
    lambda1,
    m34,
    prime_order,
    lambda2,
    general_lambda,
    prime_k,
    gsedf,
};

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::counting: return "counting";
        case Rule::packing: return "packing";
        case Rule::lambda_bound: return "lambda_bound";
        case Rule::lambda1: return "lambda1";
        case Rule::m34: return "m34";
        case Rule::prime_order: return "prime_order";
        case Rule::lambda2: return "lambda2";
        case Rule::general_lambda: return "general_lambda";
        case Rule::prime_k: return "prime_k";
        case Rule::gsedf: return "gsedf";
    }
    return "?";
}

namespace detail {
using u128 = unsigned __int128;
}

// lambda(n-1) = k^2(m-1), exactly.
inline RuleStatus rule_counting(const SedfParams& p) {
    using detail::u128;
    return u128(p.lambda) * (p.n - 1) == u128(p.k) * p.k * (p.m - 1) ? RuleStatus::pass : RuleStatus::fail;
}

// km <= n.
inline RuleStatus rule_packing(const SedfParams& p) {
    using detail::u128;
    return u128(p.k) * p.m <= p.n ? RuleStatus::pass : RuleStatus::fail;
}

// k = 1 forces lambda = 1; otherwise lambda < k.
inline RuleStatus rule_lambda_bound(const SedfParams& p) {
    bool ok = (p.k == 1 && p.lambda == 1) || (p.k > 1 && p.lambda < p.k);
    return ok ? RuleStatus::pass : RuleStatus::fail;
}

// lambda = 1 exists iff (m = 2 and n = k^2+1) or (k = 1 and m = n); a pass
// here is an existence guarantee, a fail is a non-existence proof.
inline RuleStatus rule_lambda1(const SedfParams& p) {
    using detail::u128;
    if (p.lambda != 1) return RuleStatus::not_applicable;
    bool ok = (p.m == 2 && u128(p.n) == u128(p.k) * p.k + 1) || (p.k == 1 && p.m == p.n);
    return ok ? RuleStatus::pass : RuleStatus::fail;
}

// No nontrivial (k > 1) SEDF has m = 3 or m = 4.
inline RuleStatus rule_m34(const SedfParams& p) {
    if (p.k <= 1) return RuleStatus::not_applicable;
    return (p.m == 3 || p.m == 4) ? RuleStatus::fail : RuleStatus::pass;
}

// Groups of prime order admit nothing with k > 1 and m > 2.
inline RuleStatus rule_prime_order(const SedfParams& p) {
    return (p.k > 1 && p.m > 2 && is_prime(p.n)) ? RuleStatus::fail : RuleStatus::pass;
}

// lambda = 2, m >= 3, k >= 3: needs 2(k-1)(m-2) <= k(m-1).
inline RuleStatus rule_lambda2(const SedfParams& p) {
    using detail::u128;
    if (p.lambda != 2 || p.m < 3 || p.k < 3) return RuleStatus::not_applicable;
    return u128(2) * (p.k - 1) * (p.m - 2) > u128(p.k) * (p.m - 1) ? RuleStatus::fail : RuleStatus::pass;
}

// lambda >= 2, m >= 3, k >= lambda+1: needs lambda(k-1)(m-2) <= (lambda-1)k(m-1).
inline RuleStatus rule_general_lambda(const SedfParams& p) {
    using detail::u128;
    if (p.lambda < 2 || p.m < 3 || p.k < p.lambda + 1) return RuleStatus::not_applicable;
    return u128(p.lambda) * (p.k - 1) * (p.m - 2) > u128(p.lambda - 1) * p.k * (p.m - 1)
               ? RuleStatus::fail
               : RuleStatus::pass;
}

// m = 2 with prime k: only lambda = 1 survives.
inline RuleStatus rule_prime_k(const SedfParams& p) {
    if (p.m != 2 || !is_prime(p.k)) return RuleStatus::not_applicable;
    return p.lambda != 1 ? RuleStatus::fail : RuleStatus::pass;
}

// For every i with k_i > lambda_i > 1 and 2*lambda_i <= Lambda:
// (k_i-1)(Lambda-2*lambda_i) <= (K-k_i)(lambda_i-1).
inline RuleStatus rule_gsedf(const GsedfParams& p) {
    using detail::u128;
    if (p.ks.size() != p.lambdas.size())
        throw std::invalid_argument("GSEDF size and multiplicity lists differ in length");
    if (p.m() < 3) return RuleStatus::not_applicable;
    const std::uint64_t K = p.K(), L = p.Lambda();
    for (std::size_t i = 0; i < p.m(); ++i) {
        const std::uint64_t ki = p.ks[i], li = p.lambdas[i];
        if (!(ki > li && li > 1 && 2 * li <= L)) continue;
        if (u128(ki - 1) * (L - 2 * li) > u128(K - ki) * (li - 1)) return RuleStatus::fail;
    }
    return RuleStatus::pass;  // vacuously when no index qualifies
}

enum class Feasibility { exists, infeasible, open };

inline const char* to_string(Feasibility f) {
    switch (f) {
        case Feasibility::exists: return "exists";
        case Feasibility::infeasible: return "infeasible";
        case Feasibility::open: return "open";
    }
    return "?";
}

struct FeasibilityVerdict {
    Feasibility status = Feasibility::open;
    std::vector<Rule> rules_fired;  // rules that failed; nonempty iff infeasible
    std::optional<ConstructionDescriptor> witness;
    std::string note;
};

inline void validate(const SedfParams& p) {
    if (p.n < 2 || p.m < 2 || p.k < 1 || p.lambda < 1)
        throw std::invalid_argument("SEDF parameters need n >= 2, m >= 2, k >= 1, lambda >= 1");
    if (p.n > max_group_order) throw std::invalid_argument("n exceeds the 2^20 cap");
    if (p.m > (std::uint64_t(1) << 32) || p.k > (std::uint64_t(1) << 32) || p.lambda > (std::uint64_t(1) << 32))
        throw std::invalid_argument("parameter exceeds supported range");
}

inline void validate(const GsedfParams& p) {
    if (p.ks.size() != p.lambdas.size()) throw std::invalid_argument("GSEDF size and multiplicity lists differ in length");
    if (p.m() < 2) throw std::invalid_argument("GSEDF parameters need m >= 2");
    if (p.n < 2) throw std::invalid_argument("GSEDF parameters need n >= 2");
    if (p.n > max_group_order) throw std::invalid_argument("n exceeds the 2^20 cap");
    for (std::size_t i = 0; i < p.m(); ++i)
        if (p.ks[i] < 1 || p.lambdas[i] < 1 || p.ks[i] > max_group_order || p.lambdas[i] > max_group_order)
            throw std::invalid_argument("GSEDF entries must be positive and within the 2^20 cap");
    if (p.K() > p.n) throw std::invalid_argument("GSEDF sets cannot outnumber the group (K > n)");
}

// Runs every applicable rule; any failure means infeasible. Otherwise an
// in-repo construction is searched for; parameters no rule kills and no
// construction reaches stay open.
inline FeasibilityVerdict classify(const SedfParams& p) {
    validate(p);
    FeasibilityVerdict v;
    const std::pair<Rule, RuleStatus> evals[] = {
        {Rule::counting, rule_counting(p)},   {Rule::packing, rule_packing(p)},
        {Rule::lambda_bound, rule_lambda_bound(p)}, {Rule::lambda1, rule_lambda1(p)},
        {Rule::m34, rule_m34(p)},             {Rule::prime_order, rule_prime_order(p)},
        {Rule::lambda2, rule_lambda2(p)},     {Rule::general_lambda, rule_general_lambda(p)},
        {Rule::prime_k, rule_prime_k(p)},
    };
    for (auto [id, status] : evals)
        if (status == RuleStatus::fail) v.rules_fired.push_back(id);
    if (!v.rules_fired.empty()) {
        v.status = Feasibility::infeasible;
        return v;
    }

    if (p.lambda == 1) {
        // rule_lambda1 passed, so one of the two series applies
        v.status = Feasibility::exists;
        if (p.m == 2 && p.n == p.k * p.k + 1)
            v.witness = ConstructionDescriptor{ConstructionDescriptor::Kind::exponential, {p.k}};
        else
            v.witness = ConstructionDescriptor{ConstructionDescriptor::Kind::singleton, {p.n}};
        return v;
    }

    if (p.m == 2 && p.n % 4 == 1 && p.k == (p.n - 1) / 2 && p.lambda == (p.n - 1) / 4) {
        if (is_prime_power(p.n)) {
            v.status = Feasibility::exists;
            v.witness = ConstructionDescriptor{ConstructionDescriptor::Kind::cyclotomic_half, {p.n}};
        } else {
            v.status = Feasibility::open;
            v.note = "partition type: exists iff an abelian Paley-type PDS of order n exists";
        }
        return v;
    }

    v.status = Feasibility::open;
    if (p.m == 2 && p.lambda == 2) v.note = "open problem: (k^2/2+1, 2, k, 2) family";
    return v;
}

// GSEDF classification: uniform parameter vectors reduce to the SEDF rules;
// otherwise only the general inequality and the two stock examples apply.
inline FeasibilityVerdict classify_gsedf(const GsedfParams& p) {
    validate(p);
    bool uniform = true;
    for (std::size_t i = 1; i < p.m(); ++i)
        if (p.ks[i] != p.ks[0] || p.lambdas[i] != p.lambdas[0]) uniform = false;
    if (uniform) return classify(SedfParams{p.n, p.m(), p.ks[0], p.lambdas[0]});

    FeasibilityVerdict v;
    if (rule_gsedf(p) == RuleStatus::fail) {
        v.status = Feasibility::infeasible;
        v.rules_fired.push_back(Rule::gsedf);
        return v;
    }
    if (p.m() == 2) {
        bool forward = p.ks[0] == 1 && p.ks[1] == p.n - 1;
        bool backward = p.ks[1] == 1 && p.ks[0] == p.n - 1;
        if ((forward || backward) && p.lambdas[0] == 1 && p.lambdas[1] == 1) {
            v.status = Feasibility::exists;
            v.witness = ConstructionDescriptor{ConstructionDescriptor::Kind::gsedf_two_set, {p.n}};
            return v;
        }
    }
    if (p.n == 7 && p.m() == 4) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::size_t i = 0; i < 4; ++i) pairs.emplace_back(p.ks[i], p.lambdas[i]);
        std::sort(pairs.begin(), pairs.end());
        if (pairs == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {1, 1}, {1, 1}, {4, 2}}) {
            v.status = Feasibility::exists;
            v.witness = ConstructionDescriptor{ConstructionDescriptor::Kind::gsedf_z7, {}};
            return v;
        }
    }
    v.status = Feasibility::open;
    return v;
}

// Every (n, m, k, lambda) with n <= n_max passing the counting identity and
// the packing bound, classified, in lexicographic order.
inline std::vector<std::pair<SedfParams, FeasibilityVerdict>> enumerate_feasible(std::uint64_t n_max) {
    if (n_max < 2) throw std::invalid_argument("enumerate_feasible needs n_max >= 2");
    if (n_max > max_group_order) throw std::invalid_argument("n_max exceeds the 2^20 cap");
    std::vector<std::pair<SedfParams, FeasibilityVerdict>> out;
    for (std::uint64_t n = 2; n <= n_max; ++n)
        for (std::uint64_t m = 2; m <= n; ++m)
            for (std::uint64_t k = 1; k * m <= n; ++k) {
                const std::uint64_t num = k * k * (m - 1);
                if (num % (n - 1) != 0) continue;
                SedfParams p{n, m, k, num / (n - 1)};
                if (p.lambda == 0) continue;
                out.emplace_back(p, classify(p));
            }
    return out;
}

struct RegionCell {
    std::uint64_t k = 0, m = 0;
    bool violated = false;
};

// Violation grid for the necessary inequality at a fixed lambda >= 2 over
// 3 <= k <= k_max, 3 <= m <= m_max (row-major in m). Cells with k <= lambda
// are outside the inequality's scope and never marked.
inline std::vector<RegionCell> region_grid(std::uint64_t lambda, std::uint64_t m_max, std::uint64_t k_max) {
    using detail::u128;
    if (lambda < 2) throw std::invalid_argument("region_grid needs lambda >= 2");
    if (m_max > 4096 || k_max > 4096) throw std::invalid_argument("region_grid is capped at 4096 per axis");
    std::vector<RegionCell> out;
    for (std::uint64_t m = 3; m <= m_max; ++m)
        for (std::uint64_t k = 3; k <= k_max; ++k) {
            bool violated = k >= lambda + 1 &&
                            u128(lambda) * (k - 1) * (m - 2) > u128(lambda - 1) * k * (m - 1);
            out.push_back(RegionCell{k, m, violated});
        }
    return out;
}

}  // namespace edf
