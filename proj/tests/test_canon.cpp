#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nflab {
namespace {

using testing::complex_of;

TEST(CanonicalForm, SingletonsOnTwoVertices) {
    EXPECT_TRUE(canonical_form(complex_of(2, {{1}})).same_class(canonical_form(complex_of(2, {{2}}))));
}

TEST(CanonicalForm, PathMatchesItsNfImage) {
    const auto image = complex_of(4, {{1, 3}, {1, 4}, {2, 4}});
    EXPECT_TRUE(canonical_form(path(4)).same_class(canonical_form(image)));
}

TEST(CanonicalForm, BipartiteVersusTwoCliques) {
    const auto bip = complete_bipartite(2, 3);
    const auto cliques = testing::knm(2, 3);
    // 120 relabelings, none works.
    EXPECT_FALSE(testing::brute_force_isomorphism(bip, cliques).has_value());
    EXPECT_FALSE(canonical_form(bip).same_class(canonical_form(cliques)));
}

TEST(CanonicalForm, WitnessReproducesEncoding) {
    auto gen = testing::rng(20);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = testing::random_complex(1 + trial % 9, gen);
        const auto form = canonical_form(c);
        ASSERT_EQ(c.permuted(form.witness).facets(), form.encoding);
    }
}

TEST(CanonicalForm, DifferentGroundSetsNeverCollide) {
    EXPECT_FALSE(canonical_form(complex_of(2, {{1}})).same_class(canonical_form(complex_of(3, {{1}}))));
    EXPECT_FALSE(are_isomorphic(complex_of(2, {{1}}), complex_of(3, {{1}})));
}

TEST(CanonicalForm, PermutationInvariance) {
    for (int n = 1; n <= 9; ++n) {
        auto gen = testing::rng(100 + static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 200; ++trial) {
            const auto c = testing::random_complex(n, gen);
            const auto pi = testing::random_permutation(n, gen);
            const auto moved = c.permuted(pi);
            const auto a = canonical_form(c);
            const auto b = canonical_form(moved);
            ASSERT_TRUE(a.same_class(b)) << c.to_string();
            // Soundness: the witnesses compose to an explicit isomorphism.
            ASSERT_EQ(c.permuted(a.witness.then(b.witness.inverse())), moved);
        }
    }
}

TEST(CanonicalForm, HighlySymmetricComplexes) {
    for (int n = 2; n <= 9; ++n) {
        const auto k = complete(n);
        const auto pi = Permutation::from_images([&] {
            std::vector<int> v;
            for (int i = n; i >= 1; --i) v.push_back(i);
            return v;
        }());
        EXPECT_TRUE(are_isomorphic(k, k.permuted(pi)));
        EXPECT_TRUE(are_isomorphic(SimplicialComplex::empty_face(n), SimplicialComplex::empty_face(n)));
    }
    EXPECT_FALSE(are_isomorphic(cycle(6), testing::knm(3, 3)));
    EXPECT_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST(AreIsomorphic, Examples) {
    const auto c = testing::example_complex();
    EXPECT_TRUE(are_isomorphic(c, c));
    EXPECT_TRUE(are_isomorphic(path(4), nf_step(path(4))));
    EXPECT_FALSE(are_isomorphic(SimplicialComplex::empty_face(3), SimplicialComplex::simplex(3)));
}

TEST(AreIsomorphic, WitnessMapsFirstOntoSecond) {
    const auto a = complex_of(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto b = complex_of(4, {{1, 3}, {1, 4}, {2, 4}});
    const auto pi = isomorphism(a, b);
    ASSERT_TRUE(pi.has_value());
    EXPECT_EQ(a.permuted(*pi), b);
}

// Every pair of the n <= 4 universes against exhaustive relabeling search.
TEST(AreIsomorphic, AgreesWithBruteForceOnSmallUniverses) {
    for (int n = 2; n <= 4; ++n) {
        const Universe u = enumerate_complexes(n);
        for (const auto& a : u.complexes) {
            for (const auto& b : u.complexes) {
                const auto fast = isomorphism(a, b);
                const bool slow = testing::brute_force_isomorphism(a, b).has_value();
                ASSERT_EQ(fast.has_value(), slow) << a.to_string() << " vs " << b.to_string();
                if (fast) {
                    ASSERT_EQ(a.permuted(*fast), b);
                }
            }
        }
    }
}

TEST(AreIsomorphic, EquivalenceRelationOnUniverse) {
    const Universe u = enumerate_complexes(4);
    const std::size_t size = u.complexes.size();
    std::vector<std::vector<bool>> rel(size, std::vector<bool>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) rel[i][j] = are_isomorphic(u.complexes[i], u.complexes[j]);
    }
    for (std::size_t i = 0; i < size; ++i) {
        ASSERT_TRUE(rel[i][i]);
        for (std::size_t j = 0; j < size; ++j) {
            ASSERT_EQ(rel[i][j], rel[j][i]);
            if (!rel[i][j]) continue;
            for (std::size_t k = 0; k < size; ++k) {
                if (rel[j][k]) {
                    ASSERT_TRUE(rel[i][k]);
                }
            }
        }
    }
}

}  // namespace
}  // namespace nflab
