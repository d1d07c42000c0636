#include "edf/constructions.hpp"

#include <gtest/gtest.h>

#include "edf/diffcore.hpp"
#include "edf/group.hpp"

using namespace edf;

TEST(Exponential, SmallestCase) {
    auto fam = exponential_sedf(1);
    EXPECT_EQ(fam.group.order(), 2u);
    EXPECT_EQ(fam.sets, (std::vector<std::vector<GroupElement>>{{0}, {1}}));
}

TEST(Exponential, KTwoAndThree) {
    auto f2 = exponential_sedf(2);
    EXPECT_EQ(f2.group.order(), 5u);
    EXPECT_EQ(f2.sets, (std::vector<std::vector<GroupElement>>{{0, 1}, {2, 4}}));
    auto f3 = exponential_sedf(3);
    EXPECT_EQ(f3.group.order(), 10u);
    EXPECT_EQ(f3.sets, (std::vector<std::vector<GroupElement>>{{0, 1, 2}, {3, 6, 9}}));
    auto v = verify_sedf(f3);
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.lambda, 1u);
}

TEST(Singleton, SmallCases) {
    EXPECT_EQ(singleton_sedf(2).sets.size(), 2u);
    auto f3 = singleton_sedf(3);
    EXPECT_EQ(f3.sets, (std::vector<std::vector<GroupElement>>{{0}, {1}, {2}}));
    auto v = verify_sedf(singleton_sedf(5));
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 1u);
    EXPECT_EQ(v.lambda, 1u);
}

TEST(Singleton, NSetsNotNMinusOne) {
    // the n-1 singletons {1},...,{n-1} alone do not verify; {0} is needed
    auto v = verify_sedf(SetFamily{parse_group("Z5"), {{1}, {2}, {3}, {4}}});
    EXPECT_FALSE(v.is_sedf);
    EXPECT_EQ(singleton_sedf(5).sets.size(), 5u);
}

TEST(Cyclotomic, Q5) {
    auto fam = cyclotomic_half_sedf(5);
    EXPECT_EQ(fam.sets, (std::vector<std::vector<GroupElement>>{{1, 4}, {2, 3}}));
    auto v = verify_sedf(fam);
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.lambda, 1u);
}

TEST(Cyclotomic, Q13) {
    auto fam = cyclotomic_half_sedf(13);
    EXPECT_EQ(fam.sets[0], (std::vector<GroupElement>{1, 3, 4, 9, 10, 12}));
    auto v = verify_sedf(fam);
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 6u);
    EXPECT_EQ(v.lambda, 3u);
}

TEST(Cyclotomic, Q9GivesTheNineTwoFourTwo) {
    auto fam = cyclotomic_half_sedf(9);
    EXPECT_EQ(fam.group.factors(), (std::vector<std::uint32_t>{3, 3}));
    // squares of GF(9) are exactly {(0,1),(0,2),(1,0),(2,0)}
    EXPECT_EQ(fam.sets[0], (std::vector<GroupElement>{1, 2, 3, 6}));
    auto v = verify_sedf(fam);
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 4u);
    EXPECT_EQ(v.lambda, 2u);
}

TEST(Cyclotomic, Rejections) {
    EXPECT_THROW(cyclotomic_half_sedf(7), std::invalid_argument);   // 7 = 3 mod 4
    EXPECT_THROW(cyclotomic_half_sedf(21), std::invalid_argument);  // not a prime power
    EXPECT_THROW(cyclotomic_half_sedf(8), std::invalid_argument);
}

TEST(Cyclotomic, SetsAreNegationClosed) {
    for (std::uint32_t q : {5u, 9u, 13u, 17u, 25u}) {
        auto fam = cyclotomic_half_sedf(q);
        for (const auto& s : fam.sets) {
            std::vector<GroupElement> neg;
            for (auto x : s) neg.push_back(fam.group.negate(x));
            std::sort(neg.begin(), neg.end());
            EXPECT_EQ(neg, s) << "q=" << q;
        }
    }
}

TEST(PaleyLines, Q3DefaultSlopes) {
    auto d = paley_lines_pds(3);
    // slopes (inf, 0): {(0,1),(0,2)} and {(1,0),(2,0)}
    EXPECT_EQ(d.elements, (std::vector<GroupElement>{1, 2, 3, 6}));
    auto v = verify_pds(d.elements, d.group);
    EXPECT_TRUE(v.paley_type);
}

TEST(PaleyLines, Q3ComplementarySlopes) {
    auto d = paley_lines_pds(3, {1, 2});
    // lines y=x and y=2x: {(1,1),(2,2),(1,2),(2,1)}
    EXPECT_EQ(d.elements, (std::vector<GroupElement>{4, 5, 7, 8}));
    EXPECT_TRUE(verify_pds(d.elements, d.group).paley_type);
}

TEST(PaleyLines, Q5Parameters) {
    auto d = paley_lines_pds(5);
    auto v = verify_pds(d.elements, d.group);
    EXPECT_TRUE(v.paley_type);
    EXPECT_EQ(v.params.v, 25u);
    EXPECT_EQ(v.params.k, 12u);
    EXPECT_EQ(v.params.lambda, 5u);
    EXPECT_EQ(v.params.mu, 6u);
}

TEST(PaleyLines, SizeIsLinesTimesPoints) {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        auto d = paley_lines_pds(q);
        EXPECT_EQ(d.elements.size(), std::size_t(q + 1) / 2 * (q - 1)) << "q=" << q;
    }
}

TEST(PaleyLines, SlopeValidation) {
    EXPECT_THROW(paley_lines_pds(5, {0, 1}), std::invalid_argument);           // wrong count
    EXPECT_THROW(paley_lines_pds(5, {0, 1, 1}), std::invalid_argument);        // repeat
    EXPECT_THROW(paley_lines_pds(5, {0, 1, 5}), std::invalid_argument);        // out of range
    EXPECT_THROW(paley_lines_pds(4), std::invalid_argument);                   // even q
    EXPECT_NO_THROW(paley_lines_pds(5, {slope_infinity, 2, 4}));
}

TEST(PdsComplement, PaperExample) {
    auto d1 = paley_lines_pds(3);
    auto d2 = pds_complement(d1);
    EXPECT_EQ(d2.elements, (std::vector<GroupElement>{4, 5, 7, 8}));
    auto v = verify_pds(d2.elements, d2.group);
    EXPECT_TRUE(v.paley_type);
    EXPECT_EQ(v.params.lambda, 1u);
    EXPECT_EQ(v.params.mu, 2u);
}

TEST(PdsComplement, Z13Residues) {
    GroupSubset qr{parse_group("Z13"), {1, 3, 4, 9, 10, 12}};
    auto c = pds_complement(qr);
    EXPECT_EQ(c.elements, (std::vector<GroupElement>{2, 5, 6, 7, 8, 11}));
    EXPECT_TRUE(verify_pds(c.elements, c.group).paley_type);
}

TEST(PdsComplement, Involution) {
    auto d = paley_lines_pds(5);
    auto twice = pds_complement(pds_complement(d));
    EXPECT_EQ(twice.elements, d.elements);
}

TEST(PdsComplement, RejectsNonPaley) {
    GroupSubset bad{parse_group("Z13"), {1, 2, 3, 4, 5, 6}};
    EXPECT_THROW(pds_complement(bad), std::invalid_argument);
}

TEST(PdsToSedf, PaperExample) {
    auto fam = paley_pds_to_sedf(paley_lines_pds(3));
    EXPECT_EQ(fam.sets, (std::vector<std::vector<GroupElement>>{{1, 2, 3, 6}, {4, 5, 7, 8}}));
    auto v = verify_sedf(fam);
    EXPECT_TRUE(v.is_sedf);
    EXPECT_EQ(v.k, 4u);
    EXPECT_EQ(v.lambda, 2u);
}

TEST(PdsToSedf, ResidueFamilies) {
    GroupSubset qr13{parse_group("Z13"), {1, 3, 4, 9, 10, 12}};
    auto v13 = verify_sedf(paley_pds_to_sedf(qr13));
    EXPECT_TRUE(v13.is_sedf);
    EXPECT_EQ(v13.k, 6u);
    EXPECT_EQ(v13.lambda, 3u);

    GroupSubset qr17{parse_group("Z17"), {1, 2, 4, 8, 9, 13, 15, 16}};
    auto v17 = verify_sedf(paley_pds_to_sedf(qr17));
    EXPECT_TRUE(v17.is_sedf);
    EXPECT_EQ(v17.k, 8u);
    EXPECT_EQ(v17.lambda, 4u);
}

TEST(Gsedf, Z7Example) {
    auto fam = gsedf_z7();
    auto v = verify_gsedf(fam);
    EXPECT_TRUE(v.is_gsedf);
    EXPECT_EQ(v.lambdas, (std::vector<std::uint32_t>{1, 1, 1, 2}));
}

TEST(Gsedf, TwoSetExamples) {
    auto v4 = verify_gsedf(gsedf_two_set(4));
    EXPECT_TRUE(v4.is_gsedf);
    EXPECT_EQ(v4.lambdas, (std::vector<std::uint32_t>{1, 1}));
    auto f2 = gsedf_two_set(2);
    EXPECT_EQ(f2.sets, (std::vector<std::vector<GroupElement>>{{0}, {1}}));
    EXPECT_EQ(gsedf_examples(4).size(), 2u);
}

TEST(Descriptors, Formatting) {
    ConstructionDescriptor d{ConstructionDescriptor::Kind::cyclotomic_half, {9}};
    EXPECT_EQ(to_string(d), "cyclotomic_half_sedf(9)");
    ConstructionDescriptor e{ConstructionDescriptor::Kind::exponential, {3}};
    EXPECT_EQ(to_string(e), "exponential_sedf(3)");
    ConstructionDescriptor z{ConstructionDescriptor::Kind::gsedf_z7, {}};
    EXPECT_EQ(to_string(z), "gsedf_z7");
}

TEST(Descriptors, BuildWitness) {
    auto fam = build_witness(ConstructionDescriptor{ConstructionDescriptor::Kind::paley_lines, {3}});
    EXPECT_TRUE(verify_sedf(fam).is_sedf);
    EXPECT_THROW(build_witness(ConstructionDescriptor{ConstructionDescriptor::Kind::pds_complement, {}}),
                 std::invalid_argument);
}
