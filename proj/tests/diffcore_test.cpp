#include "edf/diffcore.hpp"

#include <gtest/gtest.h>

#include <random>

#include "edf/group.hpp"

using namespace edf;

namespace {

// The (9,2,4,2) pair {(0,1),(0,2),(1,0),(2,0)} / {(1,1),(1,2),(2,1),(2,2)}
// in Z3xZ3, written as element indices (tuple (a,b) has index 3a+b).
SetFamily nine_two_four_two() {
    return SetFamily{parse_group("Z3xZ3"), {{1, 2, 3, 6}, {4, 5, 7, 8}}};
}

SetFamily z13_residue_pair() {
    return SetFamily{parse_group("Z13"), {{1, 3, 4, 9, 10, 12}, {2, 5, 6, 7, 8, 11}}};
}

}  // namespace

TEST(DifferenceTally, Z5Example) {
    auto g = parse_group("Z5");
    auto t = difference_tally(g, {0, 1}, {2, 4});
    EXPECT_EQ(t.counts, (std::vector<std::uint32_t>{0, 1, 1, 1, 1}));
    EXPECT_EQ(t.total(), 4u);
}

TEST(DifferenceTally, EmptySet) {
    auto g = parse_group("Z5");
    auto t = difference_tally(g, {}, {1, 2, 3});
    EXPECT_EQ(t.total(), 0u);
    for (auto c : t.counts) EXPECT_EQ(c, 0u);
}

TEST(DifferenceTally, SinglePairInProduct) {
    auto g = parse_group("Z3xZ3");
    GroupElement a = g.encode(std::vector<std::uint32_t>{0, 1});
    GroupElement b = g.encode(std::vector<std::uint32_t>{1, 1});
    auto t = difference_tally(g, {a}, {b});
    // (0,1) - (1,1) = (2,0)
    EXPECT_EQ(t.counts[g.encode(std::vector<std::uint32_t>{2, 0})], 1u);
    EXPECT_EQ(t.total(), 1u);
}

TEST(DifferenceTally, RejectsOverlap) {
    auto g = parse_group("Z5");
    EXPECT_THROW(difference_tally(g, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST(ExternalTally, PaperPair) {
    auto fam = nine_two_four_two();
    auto t = external_tally(fam, 0);
    EXPECT_EQ(t.counts[0], 0u);
    for (GroupElement d = 1; d < 9; ++d) EXPECT_EQ(t.counts[d], 2u);
}

TEST(ExternalTally, SingleSetFamilyIsZero) {
    SetFamily fam{parse_group("Z7"), {{0, 2, 5}}};
    auto t = external_tally(fam, 0);
    EXPECT_EQ(t.total(), 0u);
}

TEST(ExternalTally, GsedfLargeSet) {
    // in the Z7 example the big set's external differences cover twice
    SetFamily fam{parse_group("Z7"), {{1}, {2}, {4}, {0, 3, 5, 6}}};
    auto t = external_tally(fam, 3);
    for (GroupElement d = 1; d < 7; ++d) EXPECT_EQ(t.counts[d], 2u);
}

TEST(VerifySedf, PaperPairHolds) {
    auto v = verify_sedf(nine_two_four_two());
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 4u);
    EXPECT_EQ(v.lambda, 2u);
}

TEST(VerifySedf, Z5Exponential) {
    auto v = verify_sedf(SetFamily{parse_group("Z5"), {{0, 1}, {2, 4}}});
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 2u);
    EXPECT_EQ(v.lambda, 1u);
}

TEST(VerifySedf, Z5NearMissFails) {
    auto v = verify_sedf(SetFamily{parse_group("Z5"), {{0, 1}, {2, 3}}});
    EXPECT_FALSE(v.is_sedf);
    ASSERT_TRUE(v.defect.has_value());
    // differences from {0,1}: 0-2=3, 0-3=2, 1-2=4, 1-3=3 -> element 3 twice
    EXPECT_EQ(v.defect->set_index, 0u);
}

TEST(VerifySedf, Errors) {
    EXPECT_THROW(verify_sedf(SetFamily{parse_group("Z5"), {{0, 1}}}), std::invalid_argument);
    EXPECT_THROW(verify_sedf(SetFamily{parse_group("Z5"), {{0, 1}, {1, 2}}}), std::invalid_argument);
}

TEST(VerifySedf, UnequalSizesFail) {
    auto v = verify_sedf(SetFamily{parse_group("Z7"), {{0, 1}, {2}}});
    EXPECT_FALSE(v.is_sedf);
    EXPECT_FALSE(v.reason.empty());
}

TEST(VerifyEdf, SedfImpliesEdf) {
    auto v = verify_edf(nine_two_four_two());
    EXPECT_TRUE(v.is_edf);
    EXPECT_EQ(v.lambda, 4u);  // m * lambda
}

TEST(VerifyEdf, ResiduePairOfZ13) {
    auto v = verify_edf(z13_residue_pair());
    EXPECT_TRUE(v.is_edf);
    EXPECT_EQ(v.lambda, 6u);
}

TEST(VerifyEdf, MutatedFamilyFails) {
    auto fam = nine_two_four_two();
    fam.sets[1][0] = 0;  // move (1,1) to the identity
    auto v = verify_edf(fam);
    EXPECT_FALSE(v.is_edf);
    EXPECT_TRUE(v.defect.has_value());
}

TEST(VerifyGsedf, Z7Example) {
    auto v = verify_gsedf(SetFamily{parse_group("Z7"), {{1}, {2}, {4}, {0, 3, 5, 6}}});
    EXPECT_TRUE(v.is_gsedf);
    EXPECT_EQ(v.lambdas, (std::vector<std::uint32_t>{1, 1, 1, 2}));
}

TEST(VerifyGsedf, TwoSetPattern) {
    auto v = verify_gsedf(SetFamily{parse_group("Z4"), {{0}, {1, 2, 3}}});
    EXPECT_TRUE(v.is_gsedf);
    EXPECT_EQ(v.lambdas, (std::vector<std::uint32_t>{1, 1}));
}

TEST(VerifyGsedf, UniformSedfIsGsedf) {
    auto v = verify_gsedf(nine_two_four_two());
    EXPECT_TRUE(v.is_gsedf);
    EXPECT_EQ(v.lambdas, (std::vector<std::uint32_t>{2, 2}));
}

TEST(VerifyGsedf, EmptySetFails) {
    auto v = verify_gsedf(SetFamily{parse_group("Z4"), {{0}, {}}});
    EXPECT_FALSE(v.is_gsedf);
}

TEST(VerifyPds, PaperExample) {
    auto g = parse_group("Z3xZ3");
    auto v = verify_pds({1, 2, 3, 6}, g);
    EXPECT_TRUE(v.is_pds);
    EXPECT_EQ(v.params.v, 9u);
    EXPECT_EQ(v.params.k, 4u);
    EXPECT_EQ(v.params.lambda, 1u);
    EXPECT_EQ(v.params.mu, 2u);
    EXPECT_TRUE(v.regular);
    EXPECT_TRUE(v.paley_type);
}

TEST(VerifyPds, Z13Residues) {
    auto v = verify_pds({1, 3, 4, 9, 10, 12}, parse_group("Z13"));
    EXPECT_TRUE(v.is_pds);
    EXPECT_EQ(v.params.lambda, 2u);
    EXPECT_EQ(v.params.mu, 3u);
    EXPECT_TRUE(v.paley_type);
}

TEST(VerifyPds, EmptySet) {
    auto v = verify_pds({}, parse_group("Z5"));
    EXPECT_TRUE(v.is_pds);
    EXPECT_EQ(v.params.k, 0u);
    EXPECT_FALSE(v.paley_type);
}

TEST(VerifyPds, IdentityMemberBlocksRegularity) {
    auto v = verify_pds({0, 1, 4}, parse_group("Z5"));
    EXPECT_FALSE(v.regular);
    EXPECT_FALSE(v.paley_type);
}

TEST(VerifyPds, NonPds) {
    auto v = verify_pds({1, 2}, parse_group("Z7"));
    // internal differences: 1-2=6, 2-1=1 -> member 1 hit once, member 2 zero times
    EXPECT_FALSE(v.is_pds);
    EXPECT_TRUE(v.defect.has_value());
}

// --- spec invariants --------------------------------------------------

TEST(Invariants, ReversalSymmetry) {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        std::uniform_int_distribution<std::uint32_t> order(2, 24);
        FiniteAbelianGroup g({order(rng)});
        std::vector<GroupElement> pool(g.order());
        std::iota(pool.begin(), pool.end(), 0u);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> asz(0, g.order() / 2);
        std::size_t na = asz(rng), nb = std::min<std::size_t>(g.order() - na, asz(rng));
        std::vector<GroupElement> a(pool.begin(), pool.begin() + na);
        std::vector<GroupElement> b(pool.begin() + na, pool.begin() + na + nb);
        auto tab = difference_tally(g, a, b);
        auto tba = difference_tally(g, b, a);
        for (GroupElement d = 0; d < g.order(); ++d)
            ASSERT_EQ(tab.counts[d], tba.counts[g.negate(d)]);
    }
}

TEST(Invariants, MassConservation) {
    auto fam = nine_two_four_two();
    // k_i (K - k_i) with K the total of all set sizes
    EXPECT_EQ(external_tally(fam, 0).total(), 4u * 4u);
    SetFamily z7{parse_group("Z7"), {{1}, {2}, {4}, {0, 3, 5, 6}}};
    EXPECT_EQ(external_tally(z7, 0).total(), 1u * 6u);
    EXPECT_EQ(external_tally(z7, 3).total(), 4u * 3u);
}

TEST(Invariants, CountingIdentityOnVerifiedFamilies) {
    for (auto fam : {nine_two_four_two(), z13_residue_pair()}) {
        auto v = verify_sedf(fam);
        ASSERT_TRUE(v.is_sedf);
        std::uint64_t n = fam.group.order(), m = fam.sets.size();
        EXPECT_EQ(std::uint64_t(v.lambda) * (n - 1), std::uint64_t(v.k) * v.k * (m - 1));
    }
}

TEST(Invariants, GsedfCountingIdentity) {
    SetFamily z7{parse_group("Z7"), {{1}, {2}, {4}, {0, 3, 5, 6}}};
    auto v = verify_gsedf(z7);
    ASSERT_TRUE(v.is_gsedf);
    std::uint64_t n = 7, K = 1 + 1 + 1 + 4;
    for (std::size_t i = 0; i < z7.sets.size(); ++i) {
        std::uint64_t ki = z7.sets[i].size();
        EXPECT_EQ(std::uint64_t(v.lambdas[i]) * (n - 1), ki * (K - ki));
    }
}

TEST(Invariants, SedfImpliesEdfWithScaledLambda) {
    for (auto fam : {nine_two_four_two(), z13_residue_pair()}) {
        auto s = verify_sedf(fam);
        auto e = verify_edf(fam);
        ASSERT_TRUE(s.is_sedf);
        ASSERT_TRUE(e.is_edf);
        EXPECT_EQ(e.lambda, s.lambda * fam.sets.size());
    }
}
