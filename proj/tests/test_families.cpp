#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nflab {
namespace {

using testing::complex_of;

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Pairs 2 <= n <= m <= 5 without (2, 2).
std::vector<BlockSplit> block_pairs() {
    std::vector<BlockSplit> out;
    for (int n = 2; n <= 5; ++n) {
        for (int m = n; m <= 5; ++m) {
            if (n == 2 && m == 2) continue;
            out.push_back(BlockSplit{n, m});
        }
    }
    return out;
}

TEST(Families, Graphs) {
    EXPECT_EQ(path(2), complex_of(2, {{1, 2}}));
    EXPECT_EQ(path(4), complex_of(4, {{1, 2}, {2, 3}, {3, 4}}));
    EXPECT_EQ(cycle(3), complete(3));
    EXPECT_EQ(cycle(5).facet_count(), 5u);
    EXPECT_EQ(complete(2), path(2));
    EXPECT_EQ(complete(6).facet_count(), 15u);
    EXPECT_EQ(complete_bipartite(1, 1), complex_of(2, {{1, 2}}));
    EXPECT_EQ(disjoint_union(complete(2), complete(2)), complex_of(4, {{1, 2}, {3, 4}}));
    EXPECT_EQ(disjoint_union(complete(2), SimplicialComplex::simplex(3)).dimension(), 2);
}

TEST(Families, Errors) {
    EXPECT_THROW(path(1), Error);
    EXPECT_THROW(cycle(2), Error);
    EXPECT_THROW(complete(1), Error);
    EXPECT_THROW(complete_bipartite(0, 3), Error);
    EXPECT_THROW(disjoint_union(SimplicialComplex::empty_face(2), complete(2)), Error);
    EXPECT_THROW(m_family(BlockSplit{2, 3}, 3, 0), Error);
    EXPECT_THROW(m_family(BlockSplit{2, 3}, 0, -1), Error);
    EXPECT_THROW(knm_facets_closed_form(BlockSplit{4, 3}, 2), Error);
    EXPECT_THROW(knm_facets_closed_form(BlockSplit{2, 2}, 2), Error);
    EXPECT_THROW(knm_facets_closed_form(BlockSplit{2, 3}, 8), Error);
    EXPECT_THROW(knm_facets_closed_form(BlockSplit{2, 3}, -1), Error);
    EXPECT_THROW(knm_dimension_formula(BlockSplit{2, 3}, 7), Error);
    EXPECT_THROW(knm_dimension_formula(BlockSplit{2, 3}, 0), Error);
}

TEST(Families, BipartiteIsFirstStepOfTwoCliques) {
    for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= 5; ++m) {
            EXPECT_EQ(complete_bipartite(n, m), nf_step(testing::knm(n, m)));
        }
    }
}

TEST(MFamily, SizesAreBinomialProducts) {
    for (int n = 1; n <= 5; ++n) {
        for (int m = 1; m <= 5; ++m) {
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= m; ++j) {
                    const auto fam = m_family(BlockSplit{n, m}, i, j);
                    ASSERT_EQ(fam.size(), binomial(n, i) * binomial(m, j));
                    for (VertexSet s : fam) {
                        ASSERT_EQ((s & VertexSet::full(n)).size(), i);
                        ASSERT_EQ(s.size() - i, j);
                    }
                }
            }
        }
    }
}

TEST(MFamily, SmallCases) {
    EXPECT_EQ(m_family(BlockSplit{2, 2}, 0, 0), std::vector<VertexSet>{VertexSet{}});
    EXPECT_EQ(m_family(BlockSplit{2, 3}, 2, 0), std::vector<VertexSet>{(VertexSet{1, 2})});
    EXPECT_EQ(m_complement_family(BlockSplit{2, 3}, 0, 3), std::vector<VertexSet>{(VertexSet{1, 2})});
    EXPECT_TRUE(m_complement_family(BlockSplit{3, 3}, 0, 4).empty());
}

TEST(ClosedForm, NamedSteps) {
    const BlockSplit s{3, 4};
    EXPECT_EQ(knm_facets_closed_form(s, 2), SimplicialComplex::from_faces(7, {VertexSet{1, 2, 3}, VertexSet{4, 5, 6, 7}}));
    std::vector<VertexSet> four = m_complement_family(s, 2, 0);
    for (VertexSet f : m_complement_family(s, 0, 2)) four.push_back(f);
    EXPECT_EQ(knm_facets_closed_form(s, 4), SimplicialComplex::from_faces(7, four));
    EXPECT_EQ(knm_facets_closed_form(s, 3 + 4 + 2), testing::knm(3, 4));
}

// Iterated nf_step against the block-count closed forms, labeled equality.
TEST(ClosedForm, MatchesIteratedSteps) {
    for (const BlockSplit& s : block_pairs()) {
        SimplicialComplex cur = testing::knm(s.n, s.m);
        for (int k = 0; k <= s.n + s.m + 2; ++k) {
            const auto expected = knm_facets_closed_form(s, k);
            ASSERT_EQ(cur, expected) << "n=" << s.n << " m=" << s.m << " k=" << k << "\n  iterated: " << cur.to_string()
                                     << "\n  closed:   " << expected.to_string();
            cur = nf_step(cur);
        }
    }
}

TEST(DimensionFormula, NamedValues) {
    const BlockSplit s{3, 5};
    EXPECT_EQ(knm_dimension_formula(s, 1), 1);
    EXPECT_EQ(knm_dimension_formula(s, 2), 4);
    EXPECT_EQ(knm_dimension_formula(s, 3), 5);
    EXPECT_EQ(knm_dimension_formula(s, 6), 4);
}

// The case table is off by one at k = 4: delta^(4) has facets
// M_(n-2,m) and M_(n,m-2), so its dimension is n+m-3 rather than n+m-2.
// Every other k agrees.
TEST(DimensionFormula, MatchesIteratedStepsExceptAtFour) {
    for (const BlockSplit& s : block_pairs()) {
        SimplicialComplex cur = testing::knm(s.n, s.m);
        for (int k = 1; k < s.n + s.m + 2; ++k) {
            cur = nf_step(cur);
            if (k == 4) {
                ASSERT_EQ(cur.dimension(), s.n + s.m - 3);
                ASSERT_EQ(knm_dimension_formula(s, k), s.n + s.m - 2);
            } else {
                ASSERT_EQ(cur.dimension(), knm_dimension_formula(s, k)) << s.n << "," << s.m << " k=" << k;
            }
            if (k >= 2) {
                ASSERT_GT(cur.dimension(), 1);
            }
        }
    }
}

}  // namespace
}  // namespace nflab
