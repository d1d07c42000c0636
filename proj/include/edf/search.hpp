// Exhaustive backtracking searches over small groups: all SEDFs or PDSs with
// given parameters, the partition-type characterization crosscheck, and a
// sweep that pits the feasibility classifier against the search oracle.
//
// SEDF search grows sets in canonical order (sets ordered by minimum
// element, elements ascending) with one incremental external tally per set;
// a branch dies as soon as any tally entry would exceed lambda. Accepted
// families are re-verified from scratch; a disagreement between the
// incremental state and the verifier throws, it is never papered over.
//
// Symmetry levels: "translation" just pins 0 into A1 (so emitted lists still
// contain translated copies of one another); the negation/units levels keep
// exactly the lexicographically least representative of each orbit under
// the generated transformation group. Unit multiplication needs a
// single-factor group. PDS search is always a plain exhaustive subset
// enumeration; translation does not preserve the PDS classes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edf/diffcore.hpp"
#include "edf/feasibility.hpp"
#include "edf/group.hpp"

namespace edf {

enum class Symmetry { none, translation, translation_negation, translation_negation_units };

struct SearchOptions {
    Symmetry symmetry = Symmetry::translation;
    std::optional<std::uint64_t> result_limit;
    std::optional<std::uint64_t> node_budget;
};

struct SearchReport {
    std::vector<SetFamily> families;
    std::uint64_t nodes_explored = 0;
    bool exhausted = true;  // false whenever a budget or result limit cut the walk short
};

namespace detail {

inline std::vector<GroupElement> flatten(const std::vector<std::vector<GroupElement>>& sets) {
    std::vector<GroupElement> flat;
    for (const auto& s : sets) flat.insert(flat.end(), s.begin(), s.end());
    return flat;
}

// Element maps generating the declared symmetry beyond translations.
inline std::vector<std::vector<GroupElement>> symmetry_maps(const FiniteAbelianGroup& g, Symmetry sym) {
    const std::uint32_t n = g.order();
    std::vector<std::vector<GroupElement>> maps;
    auto identity = [&] {
        std::vector<GroupElement> m(n);
        std::iota(m.begin(), m.end(), 0u);
        return m;
    };
    if (sym == Symmetry::translation_negation) {
        maps.push_back(identity());
        std::vector<GroupElement> neg(n);
        for (GroupElement x = 0; x < n; ++x) neg[x] = g.negate(x);
        maps.push_back(std::move(neg));
    } else if (sym == Symmetry::translation_negation_units) {
        if (!g.single_factor())
            throw std::invalid_argument("unit-multiplication symmetry needs a single-factor group");
        for (std::uint32_t u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            std::vector<GroupElement> m(n);
            for (GroupElement x = 0; x < n; ++x) m[x] = static_cast<GroupElement>(std::uint64_t(u) * x % n);
            maps.push_back(std::move(m));
        }
    }
    return maps;
}

// Canonical presentation: elements ascending inside sets, sets ordered by
// first element.
inline std::vector<GroupElement> canonical_code(std::vector<std::vector<GroupElement>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return flatten(sets);
}

// Searches keep a dense n x n subtraction table.
inline constexpr std::uint32_t max_search_order = 1024;

inline std::vector<GroupElement> subtraction_table(const FiniteAbelianGroup& g) {
    const std::uint32_t n = g.order();
    if (n > max_search_order) throw std::invalid_argument("search supports group orders up to 1024");
    std::vector<GroupElement> diff(std::size_t(n) * n);
    for (GroupElement x = 0; x < n; ++x)
        for (GroupElement y = 0; y < n; ++y) diff[std::size_t(x) * n + y] = g.sub(x, y);
    return diff;
}

class SedfSearcher {
  public:
    SedfSearcher(const FiniteAbelianGroup& g, std::uint32_t m, std::uint32_t k, std::uint32_t lambda,
                 const SearchOptions& opts)
        : g_(g), n_(g.order()), m_(m), k_(k), lambda_(lambda), opts_(opts) {
        if (m < 2) throw std::invalid_argument("search_sedf needs m >= 2");
        if (k < 1 || lambda < 1) throw std::invalid_argument("search_sedf needs k >= 1 and lambda >= 1");
        if (std::uint64_t(m) * k > n_) throw std::invalid_argument("search_sedf: km exceeds the group order");
        maps_ = symmetry_maps(g, opts.symmetry);
        diff_ = subtraction_table(g);
        used_.assign(n_, false);
        tally_.assign(m, std::vector<std::uint32_t>(n_, 0));
        sets_.resize(m);
    }

    SearchReport run() {
        if (opts_.symmetry == Symmetry::none) {
            for (GroupElement f = 0; f < n_ && !stop_; ++f) {
                if (!start_room(f, 0)) break;
                if (try_place(0, f)) {
                    grow(0);
                    unplace(0, f);
                }
            }
        } else {
            if (try_place(0, 0)) {  // translation pins 0 into A1
                grow(0);
                unplace(0, 0);
            }
        }
        std::sort(report_.families.begin(), report_.families.end(),
                  [](const SetFamily& a, const SetFamily& b) { return a.sets < b.sets; });
        return std::move(report_);
    }

  private:
    GroupElement diff(GroupElement x, GroupElement y) const { return diff_[std::size_t(x) * n_ + y]; }

    // Remaining elements of set s are strictly above e (elements ascend
    // within a set); later sets only need to clear set s's first element.
    bool tail_room(GroupElement e, std::size_t s) const {
        return std::uint64_t(n_) - 1 - e >= std::uint64_t(k_) - sets_[s].size() - 1;
    }

    // Set s opened at f plus every later set must fit strictly above f
    // (except f itself).
    bool start_room(GroupElement f, std::size_t s) const {
        return std::uint64_t(n_) - 1 - f >= std::uint64_t(k_) - 1 + std::uint64_t(m_ - 1 - s) * k_;
    }

    bool try_place(std::size_t s, GroupElement e) {
        ++report_.nodes_explored;
        if (opts_.node_budget && report_.nodes_explored > *opts_.node_budget) {
            stop_ = true;
            report_.exhausted = false;
            return false;
        }
        // cross differences against every other set, both directions
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (j == s) continue;
            for (std::size_t yi = 0; yi < sets_[j].size(); ++yi) {
                GroupElement y = sets_[j][yi];
                std::uint32_t& out = tally_[s][diff(e, y)];
                std::uint32_t& in = tally_[j][diff(y, e)];
                if (out + 1 > lambda_ || in + 1 > lambda_) {
                    rollback(s, e, j, yi);
                    return false;
                }
                ++out;
                ++in;
            }
        }
        sets_[s].push_back(e);
        used_[e] = true;
        return true;
    }

    // Undo the increments try_place made before rejecting at set j, index yi.
    void rollback(std::size_t s, GroupElement e, std::size_t j_stop, std::size_t yi_stop) {
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (j == s) continue;
            for (std::size_t yi = 0; yi < sets_[j].size(); ++yi) {
                if (j == j_stop && yi == yi_stop) return;
                GroupElement y = sets_[j][yi];
                --tally_[s][diff(e, y)];
                --tally_[j][diff(y, e)];
            }
        }
    }

    void unplace(std::size_t s, GroupElement e) {
        sets_[s].pop_back();
        used_[e] = false;
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (j == s) continue;
            for (GroupElement y : sets_[j]) {
                --tally_[s][diff(e, y)];
                --tally_[j][diff(y, e)];
            }
        }
    }

    void grow(std::size_t s) {
        if (stop_) return;
        if (sets_[s].size() == k_) {
            if (s + 1 == m_)
                accept();
            else
                start_next(s + 1);
            return;
        }
        for (GroupElement e = sets_[s].back() + 1; e < n_ && !stop_; ++e) {
            if (used_[e]) continue;
            if (!tail_room(e, s)) break;
            if (try_place(s, e)) {
                grow(s);
                unplace(s, e);
            }
        }
    }

    void start_next(std::size_t s) {
        for (GroupElement f = sets_[s - 1].front() + 1; f < n_ && !stop_; ++f) {
            if (used_[f]) continue;
            if (!start_room(f, s)) break;
            if (try_place(s, f)) {
                grow(s);
                unplace(s, f);
            }
        }
    }

    void accept() {
        SetFamily fam{g_, sets_};
        // incremental tallies must agree with a from-scratch recount
        for (std::size_t i = 0; i < m_; ++i)
            if (external_tally(fam, i).counts != tally_[i])
                throw std::logic_error("search_sedf: incremental tally diverged from scratch tally");
        SedfVerdict v = verify_sedf(fam);
        if (!v.is_sedf || v.k != k_ || v.lambda != lambda_) return;  // capped but not constant-lambda
        if (!is_orbit_minimum(fam)) return;
        report_.families.push_back(std::move(fam));
        if (opts_.result_limit && report_.families.size() >= *opts_.result_limit) {
            stop_ = true;
            report_.exhausted = false;
        }
    }

    bool is_orbit_minimum(const SetFamily& fam) const {
        if (maps_.empty()) return true;  // none/translation levels keep everything
        const std::vector<GroupElement> code = flatten(fam.sets);
        std::vector<std::vector<GroupElement>> image(m_);
        for (const auto& map : maps_) {
            for (std::size_t i = 0; i < m_; ++i) {
                image[i].clear();
                for (GroupElement x : fam.sets[i]) image[i].push_back(map[x]);
            }
            for (const auto& s : image)
                for (GroupElement v : s) {
                    std::vector<std::vector<GroupElement>> shifted(m_);
                    for (std::size_t i = 0; i < m_; ++i) {
                        shifted[i].reserve(k_);
                        for (GroupElement x : image[i]) shifted[i].push_back(diff(x, v));
                    }
                    if (canonical_code(std::move(shifted)) < code) return false;
                }
        }
        return true;
    }

    const FiniteAbelianGroup& g_;
    std::uint32_t n_, m_, k_, lambda_;
    SearchOptions opts_;
    std::vector<std::vector<GroupElement>> maps_;
    std::vector<GroupElement> diff_;
    std::vector<std::vector<GroupElement>> sets_;
    std::vector<bool> used_;
    std::vector<std::vector<std::uint32_t>> tally_;
    SearchReport report_;
    bool stop_ = false;
};

}  // namespace detail

inline SearchReport search_sedf(const FiniteAbelianGroup& g, std::uint32_t m, std::uint32_t k,
                                std::uint32_t lambda, const SearchOptions& opts = {}) {
    return detail::SedfSearcher(g, m, k, lambda, opts).run();
}

// All k-subsets of G* whose internal tally is lambda on members and mu on
// nonmembers. Growth prunes at max(lambda, mu) because membership of a
// tallied element is not settled until the subset is complete; leaves get
// the exact check.
inline SearchReport search_pds(const FiniteAbelianGroup& g, std::uint32_t k, std::uint32_t lambda,
                               std::uint32_t mu, const SearchOptions& opts = {}) {
    const std::uint32_t n = g.order();
    if (k > n - 1) throw std::invalid_argument("search_pds needs k <= n-1");
    std::vector<GroupElement> diff = detail::subtraction_table(g);

    SearchReport report;
    const std::uint32_t cap = std::max(lambda, mu);
    std::vector<std::uint32_t> tally(n, 0);
    std::vector<GroupElement> d;
    d.reserve(k);
    bool stop = false;

    auto place = [&](GroupElement e) -> bool {
        ++report.nodes_explored;
        if (opts.node_budget && report.nodes_explored > *opts.node_budget) {
            stop = true;
            report.exhausted = false;
            return false;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            GroupElement y = d[i];
            std::uint32_t& a = tally[diff[std::size_t(e) * n + y]];
            std::uint32_t& b = tally[diff[std::size_t(y) * n + e]];
            if (a + 1 > cap || b + 1 > cap) {
                for (std::size_t j = 0; j < i; ++j) {
                    GroupElement z = d[j];
                    --tally[diff[std::size_t(e) * n + z]];
                    --tally[diff[std::size_t(z) * n + e]];
                }
                return false;
            }
            ++a;
            ++b;
        }
        d.push_back(e);
        return true;
    };
    auto unplace = [&](GroupElement e) {
        d.pop_back();
        for (GroupElement y : d) {
            --tally[diff[std::size_t(e) * n + y]];
            --tally[diff[std::size_t(y) * n + e]];
        }
    };

    auto rec = [&](auto&& self, GroupElement from) -> void {
        if (stop) return;
        if (d.size() == k) {
            DifferenceTally scratch = internal_tally(d, g);
            if (scratch.counts != tally)
                throw std::logic_error("search_pds: incremental tally diverged from scratch tally");
            PdsVerdict v = verify_pds(d, g);
            if (v.is_pds && v.params.lambda == lambda && v.params.mu == mu) {
                report.families.push_back(SetFamily{g, {d}});
                if (opts.result_limit && report.families.size() >= *opts.result_limit) {
                    stop = true;
                    report.exhausted = false;
                }
            }
            return;
        }
        for (GroupElement e = from; e < n && !stop; ++e) {
            if (n - 1 - e < k - d.size() - 1) break;  // not enough elements left
            if (place(e)) {
                self(self, e + 1);
                unplace(e);
            }
        }
    };
    if (k >= 1)
        rec(rec, 1);  // identity excluded from the universe
    else if (verify_pds({}, g).params.lambda == lambda && mu == 0)
        report.families.push_back(SetFamily{g, {{}}});
    std::sort(report.families.begin(), report.families.end(),
              [](const SetFamily& a, const SetFamily& b) { return a.sets < b.sets; });
    return report;
}

struct CrosscheckReport {
    bool agree = true;
    std::uint64_t partitions_checked = 0;
    std::uint64_t sedf_partitions = 0;
    std::vector<std::vector<GroupElement>> counterexamples;  // offending D1 halves
};

// Enumerates every partition of G* into two halves of size (n-1)/2 (each
// unordered pair once, by pinning element 1 into D1) and checks that the
// pair is an SEDF exactly when D1 is a Paley-type PDS.
inline CrosscheckReport characterization_crosscheck(const FiniteAbelianGroup& g) {
    const std::uint32_t n = g.order();
    if (n % 4 != 1) throw std::invalid_argument("characterization_crosscheck needs |G| = 1 mod 4");
    const std::uint32_t h = (n - 1) / 2;

    CrosscheckReport report;
    std::vector<GroupElement> universe;  // candidates for the rest of D1
    for (GroupElement x = 2; x < n; ++x) universe.push_back(x);
    std::vector<std::uint32_t> idx(h - 1);
    std::iota(idx.begin(), idx.end(), 0u);

    std::vector<GroupElement> d1, d2;
    std::vector<bool> in_d1(n, false);
    for (;;) {
        d1.clear();
        d1.push_back(1);
        std::fill(in_d1.begin(), in_d1.end(), false);
        in_d1[1] = true;
        for (std::uint32_t i : idx) {
            d1.push_back(universe[i]);
            in_d1[universe[i]] = true;
        }
        d2.clear();
        for (GroupElement x = 1; x < n; ++x)
            if (!in_d1[x]) d2.push_back(x);

        ++report.partitions_checked;
        const bool sedf = verify_sedf(SetFamily{g, {d1, d2}}).is_sedf;
        const bool paley = verify_pds(d1, g).paley_type;
        if (sedf) ++report.sedf_partitions;
        if (sedf != paley) {
            report.agree = false;
            report.counterexamples.push_back(d1);
        }

        // next combination
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] == universe.size() - (idx.size() - (i - 1))) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return report;
}

struct OracleMismatch {
    SedfParams params;
    FiniteAbelianGroup group;
    std::string detail;
};

struct OracleReport {
    std::vector<OracleMismatch> mismatches;
    std::uint64_t checks_run = 0;
    std::uint64_t checks_skipped = 0;  // budget-truncated searches draw no conclusion
};

// Home group of a standalone witness descriptor.
inline FiniteAbelianGroup witness_group(const ConstructionDescriptor& d) {
    using Kind = ConstructionDescriptor::Kind;
    switch (d.kind) {
        case Kind::exponential: {
            std::uint64_t k = d.parameters.at(0);
            return FiniteAbelianGroup({static_cast<std::uint32_t>(k * k + 1)});
        }
        case Kind::singleton:
        case Kind::gsedf_two_set:
            return FiniteAbelianGroup({static_cast<std::uint32_t>(d.parameters.at(0))});
        case Kind::cyclotomic_half: {
            auto pp = prime_power_decompose(d.parameters.at(0));
            if (!pp) throw std::invalid_argument("cyclotomic witness needs a prime power");
            return FiniteAbelianGroup(
                std::vector<std::uint32_t>(pp->second, static_cast<std::uint32_t>(pp->first)));
        }
        case Kind::gsedf_z7: return FiniteAbelianGroup({7});
        default: throw std::invalid_argument("descriptor has no standalone witness group");
    }
}

// For every classified parameter set with n <= n_max and every abelian group
// shape of that order (all isomorphism classes when shapes is empty):
// infeasible verdicts must search empty, exists verdicts must be found on
// the witness group's isomorphism class.
inline OracleReport oracle_vs_feasibility(std::uint32_t n_max,
                                          const std::vector<FiniteAbelianGroup>& shapes = {},
                                          std::optional<std::uint64_t> budget = std::nullopt) {
    OracleReport report;
    auto classified = enumerate_feasible(n_max);
    for (const auto& [params, verdict] : classified) {
        std::vector<FiniteAbelianGroup> groups;
        if (shapes.empty()) {
            groups = abelian_group_shapes(static_cast<std::uint32_t>(params.n));
        } else {
            for (const auto& s : shapes)
                if (s.order() == params.n) groups.push_back(s);
        }
        for (const auto& group : groups) {
            SearchOptions o;
            o.symmetry = Symmetry::translation;
            o.node_budget = budget;
            if (verdict.status == Feasibility::exists) o.result_limit = 1;
            SearchReport rep = search_sedf(group, static_cast<std::uint32_t>(params.m),
                                           static_cast<std::uint32_t>(params.k),
                                           static_cast<std::uint32_t>(params.lambda), o);
            ++report.checks_run;
            if (verdict.status == Feasibility::infeasible) {
                if (!rep.families.empty())
                    report.mismatches.push_back(
                        {params, group, "search found a family for infeasible parameters"});
                else if (!rep.exhausted)
                    ++report.checks_skipped;
            } else if (verdict.status == Feasibility::exists) {
                if (!verdict.witness) {
                    report.mismatches.push_back({params, group, "exists verdict without witness"});
                    continue;
                }
                if (!isomorphic(group, witness_group(*verdict.witness))) continue;
                if (rep.families.empty()) {
                    if (rep.exhausted)
                        report.mismatches.push_back(
                            {params, group, "exists verdict but exhaustive search found nothing"});
                    else
                        ++report.checks_skipped;
                }
            }
        }
    }
    return report;
}

}  // namespace edf
