#include "edf/search.hpp"

#include <gtest/gtest.h>

#include <random>

#include "edf/constructions.hpp"
#include "edf/group.hpp"

using namespace edf;

namespace {
bool contains_family(const SearchReport& r, const std::vector<std::vector<GroupElement>>& sets) {
    for (const auto& f : r.families)
        if (f.sets == sets) return true;
    return false;
}
}  // namespace

TEST(SearchSedf, Z5Translation) {
    SearchOptions o;
    o.symmetry = Symmetry::translation;
    auto rep = search_sedf(parse_group("Z5"), 2, 2, 1, o);
    EXPECT_TRUE(rep.exhausted);
    EXPECT_EQ(rep.families.size(), 4u);
    EXPECT_TRUE(contains_family(rep, {{0, 1}, {2, 4}}));
    for (const auto& f : rep.families) EXPECT_EQ(f.sets[0][0], 0u);  // 0 pinned into A1
}

TEST(SearchSedf, Z5NoSymmetry) {
    SearchOptions o;
    o.symmetry = Symmetry::none;
    auto rep = search_sedf(parse_group("Z5"), 2, 2, 1, o);
    EXPECT_EQ(rep.families.size(), 5u);  // one full translation orbit
    EXPECT_EQ(rep.families.size() % 5, 0u);
    EXPECT_TRUE(contains_family(rep, {{1, 4}, {2, 3}}));
}

TEST(SearchSedf, Z5NegationAndUnits) {
    SearchOptions o;
    o.symmetry = Symmetry::translation_negation;
    auto rep = search_sedf(parse_group("Z5"), 2, 2, 1, o);
    EXPECT_EQ(rep.families.size(), 1u);
    EXPECT_EQ(rep.families[0].sets, (std::vector<std::vector<GroupElement>>{{0, 1}, {2, 4}}));
    o.symmetry = Symmetry::translation_negation_units;
    auto rep2 = search_sedf(parse_group("Z5"), 2, 2, 1, o);
    EXPECT_EQ(rep2.families.size(), 1u);
}

TEST(SearchSedf, UnitsNeedSingleFactorGroup) {
    SearchOptions o;
    o.symmetry = Symmetry::translation_negation_units;
    EXPECT_THROW(search_sedf(parse_group("Z3xZ3"), 2, 4, 2, o), std::invalid_argument);
    EXPECT_NO_THROW(search_sedf(parse_group("Z9"), 2, 4, 2, o));
}

TEST(SearchSedf, NineTwoFourTwoOnProductGroup) {
    auto rep = search_sedf(parse_group("Z3xZ3"), 2, 4, 2, {});
    EXPECT_TRUE(rep.exhausted);
    // 3 partition orbits x 8 translates containing 0
    EXPECT_EQ(rep.families.size(), 24u);
    for (const auto& f : rep.families) {
        auto v = verify_sedf(f);
        EXPECT_TRUE(v.is_sedf);
        EXPECT_EQ(v.k, 4u);
        EXPECT_EQ(v.lambda, 2u);
    }
}

TEST(SearchSedf, NineTwoFourTwoAbsentOnCyclicGroup) {
    auto rep = search_sedf(parse_group("Z9"), 2, 4, 2, {});
    EXPECT_TRUE(rep.exhausted);
    EXPECT_TRUE(rep.families.empty());
}

TEST(SearchSedf, MThreeExclusionOnZ7) {
    auto rep = search_sedf(parse_group("Z7"), 3, 2, 1, {});
    EXPECT_TRUE(rep.exhausted);
    EXPECT_TRUE(rep.families.empty());
}

TEST(SearchSedf, NodeBudgetTruncates) {
    SearchOptions o;
    o.node_budget = 5;
    auto rep = search_sedf(parse_group("Z13"), 2, 6, 3, o);
    EXPECT_FALSE(rep.exhausted);
    EXPECT_LE(rep.nodes_explored, 6u);
}

TEST(SearchSedf, ResultLimitStopsEarly) {
    SearchOptions o;
    o.result_limit = 1;
    auto rep = search_sedf(parse_group("Z5"), 2, 2, 1, o);
    EXPECT_EQ(rep.families.size(), 1u);
    EXPECT_FALSE(rep.exhausted);
}

TEST(SearchSedf, RejectsOverfullParameters) {
    EXPECT_THROW(search_sedf(parse_group("Z5"), 3, 2, 1, {}), std::invalid_argument);
    EXPECT_THROW(search_sedf(parse_group("Z5"), 1, 2, 1, {}), std::invalid_argument);
}

TEST(SearchSedf, Deterministic) {
    auto a = search_sedf(parse_group("Z3xZ3"), 2, 4, 2, {});
    auto b = search_sedf(parse_group("Z3xZ3"), 2, 4, 2, {});
    ASSERT_EQ(a.families.size(), b.families.size());
    for (std::size_t i = 0; i < a.families.size(); ++i) EXPECT_EQ(a.families[i].sets, b.families[i].sets);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(SearchPds, Z13FindsBothResidueSets) {
    auto rep = search_pds(parse_group("Z13"), 6, 2, 3, {});
    EXPECT_TRUE(rep.exhausted);
    ASSERT_EQ(rep.families.size(), 2u);
    EXPECT_EQ(rep.families[0].sets[0], (std::vector<GroupElement>{1, 3, 4, 9, 10, 12}));
    EXPECT_EQ(rep.families[1].sets[0], (std::vector<GroupElement>{2, 5, 6, 7, 8, 11}));
}

TEST(SearchPds, NineFourOneTwo) {
    auto rep = search_pds(parse_group("Z3xZ3"), 4, 1, 2, {});
    EXPECT_TRUE(rep.exhausted);
    EXPECT_EQ(rep.families.size(), 6u);  // the line-pair unions
    bool found_example = false;
    for (const auto& f : rep.families) found_example |= f.sets[0] == std::vector<GroupElement>{1, 2, 3, 6};
    EXPECT_TRUE(found_example);
    for (const auto& f : rep.families) EXPECT_TRUE(verify_pds(f.sets[0], f.group).paley_type);
}

TEST(SearchPds, GoldenEmptyCase) {
    // (7,3,0,1) admits nothing: six internal differences cannot fit the classes
    auto rep = search_pds(parse_group("Z7"), 3, 0, 1, {});
    EXPECT_TRUE(rep.exhausted);
    EXPECT_TRUE(rep.families.empty());
}

TEST(SearchPds, RespectsBudget) {
    SearchOptions o;
    o.node_budget = 3;
    auto rep = search_pds(parse_group("Z13"), 6, 2, 3, o);
    EXPECT_FALSE(rep.exhausted);
}

TEST(Crosscheck, Z5) {
    auto rep = characterization_crosscheck(parse_group("Z5"));
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.partitions_checked, 3u);
    EXPECT_EQ(rep.sedf_partitions, 1u);  // {1,4} / {2,3}
}

TEST(Crosscheck, Z3xZ3) {
    auto rep = characterization_crosscheck(parse_group("Z3xZ3"));
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.partitions_checked, 35u);
    EXPECT_EQ(rep.sedf_partitions, 3u);
}

TEST(Crosscheck, Z13) {
    auto rep = characterization_crosscheck(parse_group("Z13"));
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.partitions_checked, 462u);
    EXPECT_EQ(rep.sedf_partitions, 1u);
}

TEST(Crosscheck, RejectsWrongResidue) {
    EXPECT_THROW(characterization_crosscheck(parse_group("Z7")), std::invalid_argument);
}

TEST(Oracle, SweepToTenHasNoMismatches) {
    auto rep = oracle_vs_feasibility(10);
    EXPECT_TRUE(rep.mismatches.empty());
    EXPECT_EQ(rep.checks_skipped, 0u);
    EXPECT_GT(rep.checks_run, 0u);
}

TEST(Oracle, WitnessGroups) {
    EXPECT_EQ(format_group(witness_group(
                  ConstructionDescriptor{ConstructionDescriptor::Kind::exponential, {3}})),
              "Z10");
    EXPECT_EQ(format_group(witness_group(
                  ConstructionDescriptor{ConstructionDescriptor::Kind::cyclotomic_half, {9}})),
              "Z3xZ3");
}

// Accepted families always re-verify; exercised on a random batch of small
// searchable parameter sets.
TEST(SearchSedf, AcceptedFamiliesReverify) {
    std::mt19937 rng(99);
    int accepted = 0;
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<std::uint32_t> nd(2, 13);
        std::uint32_t n = nd(rng);
        for (std::uint32_t m = 2; m <= n; ++m)
            for (std::uint32_t k = 1; k * m <= n; ++k) {
                std::uint64_t num = std::uint64_t(k) * k * (m - 1);
                if (num % (n - 1)) continue;
                std::uint32_t lambda = static_cast<std::uint32_t>(num / (n - 1));
                if (!lambda) continue;
                auto rep = search_sedf(FiniteAbelianGroup({n}), m, k, lambda, {});
                for (const auto& f : rep.families) {
                    auto v = verify_sedf(f);
                    ASSERT_TRUE(v.is_sedf);
                    ASSERT_EQ(v.lambda, lambda);
                    ++accepted;
                }
            }
    }
    EXPECT_GT(accepted, 0);
}
