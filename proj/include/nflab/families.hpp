#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nflab/complex.hpp"

namespace nflab {

// Two-block vertex set: first block is 1..n, second block is n+1..n+m.
struct BlockSplit {
    int n = 0;
    int m = 0;
};

inline SimplicialComplex path(int n) {
    if (n < 2) throw Error("path needs n >= 2, got " + std::to_string(n));
    std::vector<VertexSet> edges;
    for (int i = 1; i < n; ++i) edges.push_back(VertexSet{i, i + 1});
    return SimplicialComplex::from_antichain(n, std::move(edges));
}

inline SimplicialComplex cycle(int n) {
    if (n < 3) throw Error("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<VertexSet> edges;
    for (int i = 1; i < n; ++i) edges.push_back(VertexSet{i, i + 1});
    edges.push_back(VertexSet{1, n});
    return SimplicialComplex::from_antichain(n, std::move(edges));
}

inline SimplicialComplex complete(int n) {
    if (n < 2) throw Error("complete graph needs n >= 2, got " + std::to_string(n));
    std::vector<VertexSet> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.push_back(VertexSet{i, j});
    }
    return SimplicialComplex::from_antichain(n, std::move(edges));
}

// Second argument's vertex i becomes a.n() + i.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty_face() || b.is_empty_face()) throw Error("disjoint union with {∅} is not supported");
    if (a.n() + b.n() > kMaxVertices) throw Error("disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::vector<VertexSet> facets = a.facets();
    for (VertexSet f : b.facets()) facets.push_back(VertexSet(f.bits() << a.n()));
    return SimplicialComplex::from_antichain(a.n() + b.n(), std::move(facets));
}

inline SimplicialComplex complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw Error("complete bipartite graph needs n, m >= 1");
    std::vector<VertexSet> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) edges.push_back(VertexSet{i, n + j});
    }
    return SimplicialComplex::from_antichain(n + m, std::move(edges));
}

namespace detail {

// All k-subsets of the bit positions [offset, offset + size).
inline std::vector<std::uint64_t> block_subsets(int size, int k, int offset) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > size) return out;
    std::vector<bool> pick(static_cast<std::size_t>(size), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::uint64_t bits = 0;
        for (int i = 0; i < size; ++i) {
            if (pick[static_cast<std::size_t>(i)]) bits |= std::uint64_t{1} << (offset + i);
        }
        out.push_back(bits);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline void check_split(const BlockSplit& s) {
    if (s.n < 1 || s.m < 1) throw Error("block sizes must be >= 1");
    if (s.n + s.m > kMaxVertices) throw Error("blocks exceed " + std::to_string(kMaxVertices) + " vertices");
}

}  // namespace detail

// M_(i,j): subsets meeting the first block in i vertices and the second in j.
inline std::vector<VertexSet> m_family(const BlockSplit& split, int i, int j) {
    detail::check_split(split);
    if (i < 0 || i > split.n) throw Error("i=" + std::to_string(i) + " outside 0.." + std::to_string(split.n));
    if (j < 0 || j > split.m) throw Error("j=" + std::to_string(j) + " outside 0.." + std::to_string(split.m));
    std::vector<VertexSet> out;
    const auto first = detail::block_subsets(split.n, i, 0);
    const auto second = detail::block_subsets(split.m, j, split.n);
    out.reserve(first.size() * second.size());
    for (std::uint64_t a : first) {
        for (std::uint64_t b : second) out.push_back(VertexSet(a | b));
    }
    return out;
}

// M^c_(i,j) = M_(n-i, m-j). Indices that leave the valid range give nothing.
inline std::vector<VertexSet> m_complement_family(const BlockSplit& split, int i, int j) {
    const int ci = split.n - i;
    const int cj = split.m - j;
    if (ci < 0 || ci > split.n || cj < 0 || cj > split.m) return {};
    return m_family(split, ci, cj);
}

namespace detail {

inline void check_block_split(const BlockSplit& s) {
    check_split(s);
    if (s.n > s.m) throw Error("closed form needs n <= m: swap blocks first");
    if (s.n < 2) throw Error("closed form needs n >= 2");
    if (s.n == 2 && s.m == 2) throw Error("closed form excludes (n, m) = (2, 2)");
}

}  // namespace detail

// Facets of delta^(k)(K_n ⊔ K_m) predicted by the block-count description,
// for 0 <= k <= n+m+2. Never minimizes: the union must already be an
// antichain, and a transcription slip surfaces as an exception.
inline SimplicialComplex knm_facets_closed_form(const BlockSplit& split, int k) {
    detail::check_block_split(split);
    const int n = split.n;
    const int m = split.m;
    if (k < 0 || k > n + m + 2) {
        throw Error("k=" + std::to_string(k) + " outside 0.." + std::to_string(n + m + 2));
    }

    std::vector<VertexSet> facets;
    auto add = [&](std::vector<VertexSet> family) { facets.insert(facets.end(), family.begin(), family.end()); };
    auto add_c = [&](int i, int j) { add(m_complement_family(split, i, j)); };
    // Union of M^c_(i,j) over i+j = total with i, j in the given closed ranges.
    auto add_diagonal = [&](int total, int i_max, int j_max) {
        for (int i = 1; i <= i_max; ++i) {
            const int j = total - i;
            if (j >= 1 && j <= j_max) add_c(i, j);
        }
    };

    if (k == 0) {
        add(m_family(split, 2, 0));
        add(m_family(split, 0, 2));
    } else if (k == 1) {
        add(m_family(split, 1, 1));
    } else if (k == 2) {
        add(m_family(split, n, 0));
        add(m_family(split, 0, m));
    } else if (k == 3) {
        add_c(1, 1);
    } else if (k <= n + 2) {
        add_c(k - 2, 0);
        add_c(0, k - 2);
        add_diagonal(k - 3, n, m);
    } else if (k == n + 3) {
        add_c(0, n + 1);
        add_diagonal(n, n, m);
    } else if (k <= m + 2) {
        add_c(0, k - 2);
        add_c(n, k - 4 - n);
        add_diagonal(k - 3, n - 1, m);
    } else {
        add_c(n, k - 4 - n);
        add_c(k - 4 - m, m);
        add_diagonal(k - 3, n - 1, m - 1);
    }

    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) {
        throw std::logic_error("closed form for k=" + std::to_string(k) + " repeats a facet");
    }
    for (std::size_t a = 0; a < facets.size(); ++a) {
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            if (facets[a].is_subset_of(facets[b])) {
                throw std::logic_error("closed form for k=" + std::to_string(k) + " is not an antichain: " +
                                       facets[a].to_string() + " inside " + facets[b].to_string());
            }
        }
    }
    return SimplicialComplex::from_antichain(n + m, std::move(facets));
}

// Dimension of delta^(k)(K_n ⊔ K_m) for 1 <= k < n+m+2, n <= m, m >= 3.
inline int knm_dimension_formula(const BlockSplit& split, int k) {
    detail::check_block_split(split);
    const int n = split.n;
    const int m = split.m;
    if (k < 1 || k >= n + m + 2) {
        throw Error("k=" + std::to_string(k) + " outside 1.." + std::to_string(n + m + 1));
    }
    if (k == 1) return 1;
    if (k == 2) return m - 1;
    if (k == 3) return n + m - 3;
    if (k <= n + 2) return n + m - k + 2;
    if (k == n + 3) return m - 1;
    return n + m - k + 3;
}

}  // namespace nflab
