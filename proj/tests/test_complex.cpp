#include <gtest/gtest.h>

#include "nflab/io.hpp"
#include "test_support.hpp"

namespace nflab {
namespace {

using testing::complex_of;

TEST(VertexSet, StorageOrderIsCardinalityThenBits) {
    EXPECT_LT((VertexSet{3}), (VertexSet{1, 2}));
    EXPECT_LT((VertexSet{1, 2}), (VertexSet{1, 3}));
    EXPECT_LT(VertexSet{}, VertexSet{1});
    EXPECT_EQ((VertexSet{2, 4}).to_string(), "{2,4}");
    EXPECT_EQ(VertexSet{}.to_string(), "∅");
}

TEST(VertexSet, ComplementStaysInGroundSet) {
    EXPECT_EQ((VertexSet{1, 3}).complement(4), (VertexSet{2, 4}));
    EXPECT_EQ(VertexSet{}.complement(3), VertexSet::full(3));
    EXPECT_EQ(VertexSet::full(64).size(), 64);
}

TEST(FromFaces, KeepsOnlyMaximalFaces) {
    const auto c = complex_of(3, {{1}, {1, 2}});
    ASSERT_EQ(c.facet_count(), 1u);
    EXPECT_EQ(c.facets()[0], (VertexSet{1, 2}));
}

TEST(FromFaces, EmptyFaceComplex) {
    const auto c = complex_of(3, {VertexSet{}});
    EXPECT_TRUE(c.is_empty_face());
    EXPECT_EQ(c.facets(), std::vector<VertexSet>{VertexSet{}});
    EXPECT_EQ(c.to_string(), "{∅}");
    // ∅ is absorbed by any nonempty face.
    EXPECT_EQ(complex_of(3, {VertexSet{}, {2}}), complex_of(3, {{2}}));
}

TEST(FromFaces, WorkedExampleKeepsFourFacets) {
    const auto c = testing::example_complex();
    EXPECT_EQ(c.n(), 5);
    EXPECT_EQ(c.facets(), (std::vector<VertexSet>{{1, 2}, {2, 5}, {4, 5}, {2, 3, 4}}));
}

TEST(FromFaces, Errors) {
    EXPECT_THROW(SimplicialComplex::from_faces(3, {}), Error);
    EXPECT_THROW(complex_of(3, {{1, 4}}), Error);
    EXPECT_THROW(complex_of(0, {{1}}), Error);
    EXPECT_THROW(complex_of(65, {{1}}), Error);
    try {
        SimplicialComplex::from_faces(3, {});
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "void complex not supported");
    }
}

TEST(FromFaces, IsolatedVerticesKeepGroundSet) {
    const auto c = complex_of(3, {{2}, {3}});
    EXPECT_EQ(c.n(), 3);
    EXPECT_NE(c, complex_of(2, {{2}}));
}

TEST(Dimension, Examples) {
    EXPECT_EQ(SimplicialComplex::simplex(3).dimension(), 2);
    EXPECT_EQ(SimplicialComplex::empty_face(3).dimension(), -1);
    EXPECT_EQ(dimension(testing::example_complex()), 2);
}

TEST(ApplyPermutation, Examples) {
    const auto c = complex_of(3, {{1}, {2, 3}});
    EXPECT_EQ(apply_permutation(c, Permutation::identity(3)), c);
    EXPECT_EQ(apply_permutation(c, Permutation::from_images({2, 1, 3})), complex_of(3, {{2}, {1, 3}}));
}

TEST(ApplyPermutation, RejectsNonBijections) {
    EXPECT_THROW(Permutation::from_images({1, 1, 3}), Error);
    EXPECT_THROW(Permutation::from_images({1, 4, 2}), Error);
    EXPECT_THROW(apply_permutation(complex_of(3, {{1}}), Permutation::identity(4)), Error);
}

TEST(Permutation, CycleNotation) {
    EXPECT_EQ(Permutation::identity(4).cycle_notation(), "()");
    EXPECT_EQ(Permutation::from_images({2, 3, 1, 5, 4}).cycle_notation(), "(1 2 3)(4 5)");
    const auto p = Permutation::from_images({3, 1, 2});
    EXPECT_EQ(p.then(p.inverse()), Permutation::identity(3));
}

TEST(ComplexProperties, ConstructorInvariantsOnRandomInputs) {
    auto gen = testing::rng(1);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 9;
        const auto c = testing::random_complex(n, gen);
        const auto& f = c.facets();
        ASSERT_FALSE(f.empty());
        ASSERT_TRUE(std::is_sorted(f.begin(), f.end()));
        for (std::size_t a = 0; a < f.size(); ++a) {
            for (std::size_t b = 0; b < f.size(); ++b) {
                if (a != b) {
                    ASSERT_FALSE(f[a].is_subset_of(f[b])) << c.to_string();
                }
            }
        }
        if (!c.is_empty_face()) {
            for (VertexSet s : f) ASSERT_FALSE(s.empty());
        }
        // idempotent
        ASSERT_EQ(SimplicialComplex::from_faces(n, f), c);
        const auto pi = testing::random_permutation(n, gen);
        const auto moved = apply_permutation(c, pi);
        ASSERT_EQ(apply_permutation(moved, pi.inverse()), c);
        ASSERT_EQ(moved.dimension(), c.dimension());
        ASSERT_EQ(moved.facet_count(), c.facet_count());
    }
}

TEST(Io, JsonDocument) {
    const auto c = testing::example_complex();
    EXPECT_EQ(io::to_json(c).dump(), R"({"n":5,"facets":[[1,2],[2,5],[4,5],[2,3,4]]})");
    EXPECT_EQ(io::to_json(SimplicialComplex::empty_face(3)).dump(), R"({"n":3,"facets":[[]]})");
    const auto parsed = io::from_json_text(R"({"n": 5, "facets": [[1,2],[2,3,4],[2,5],[4,5]]})");
    EXPECT_EQ(parsed.complex, c);
    EXPECT_FALSE(parsed.reduced);
    EXPECT_TRUE(io::from_json_text(R"({"n": 3, "facets": [[1],[1,2]]})").reduced);
}

TEST(Io, LineFormat) {
    const auto c = testing::example_complex();
    EXPECT_EQ(io::to_line(c), "5: 1 2 | 2 5 | 4 5 | 2 3 4");
    EXPECT_EQ(io::from_line("5: 1 2 | 2 3 4 | 2 5 | 4 5").complex, c);
    EXPECT_EQ(io::to_line(SimplicialComplex::empty_face(3)), "3:");
    EXPECT_EQ(io::from_line("3:").complex, SimplicialComplex::empty_face(3));
    EXPECT_EQ(io::parse_document("  4: 1 2 | 2 3 | 3 4\n").complex, path(4));
}

TEST(Io, ErrorsNameTheField) {
    auto message = [](const char* text) {
        try {
            io::parse_document(text);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"facets": [[1]]})").find("\"n\""), std::string::npos);
    EXPECT_NE(message(R"({"n": 3})").find("\"facets\""), std::string::npos);
    EXPECT_NE(message(R"({"n": 3, "facets": [[1, 7]]})").find("facets[0]"), std::string::npos);
    EXPECT_NE(message(R"({"n": 3, "facets": []})").find("void"), std::string::npos);
    EXPECT_NE(message(R"({"n": 3, "facets": [[1], "x"]})").find("facets[1]"), std::string::npos);
    EXPECT_NE(message(R"({"n": 3, )").find("malformed JSON"), std::string::npos);
    EXPECT_NE(message("3: 1 x").find("bad vertex"), std::string::npos);
    EXPECT_NE(message("3: 1 4").find("outside"), std::string::npos);
}

TEST(Io, RoundTripThroughBothFormats) {
    auto gen = testing::rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = testing::random_complex(1 + trial % 10, gen);
        ASSERT_EQ(io::from_json(io::to_json(c)).complex, c);
        ASSERT_EQ(io::from_line(io::to_line(c)).complex, c);
    }
}

}  // namespace
}  // namespace nflab
