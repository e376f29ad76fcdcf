#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "nflab/complex.hpp"

namespace nflab {

// Minimal vertex covers of a complex, sorted in storage order. Read as
// variable sets these are the primary components of the facet ideal.
struct CoverFamily {
    int n = 0;
    std::vector<VertexSet> covers;

    bool operator==(const CoverFamily&) const = default;
};

inline bool is_vertex_cover(const SimplicialComplex& c, VertexSet cover) {
    return std::all_of(c.facets().begin(), c.facets().end(), [&](VertexSet f) { return cover.intersects(f); });
}

namespace detail {

// One Berge multiplication: extend the running transversal antichain so it
// also hits `facet`. Sets already hitting it survive unchanged; every other
// set t spawns t+{v} for v in facet, kept unless some survivor is inside it.
// Two spawned sets are never comparable when the input is an antichain, so
// only survivors need checking.
inline void berge_extend(std::vector<VertexSet>& transversals, VertexSet facet) {
    std::vector<VertexSet> kept;
    std::vector<VertexSet> missing;
    for (VertexSet t : transversals) (t.intersects(facet) ? kept : missing).push_back(t);
    if (missing.empty()) return;

    // Survivors bucketed by cardinality; a survivor can only sit inside a
    // candidate of strictly larger size.
    int max_size = 0;
    for (VertexSet k : kept) max_size = std::max(max_size, k.size());
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(max_size) + 1);
    for (VertexSet k : kept) by_size[static_cast<std::size_t>(k.size())].push_back(k.bits());

    std::vector<VertexSet> next = kept;
    for (VertexSet t : missing) {
        facet.for_each([&](int v) {
            VertexSet cand = t;
            cand.insert(v);
            const std::uint64_t cb = cand.bits();
            const int limit = std::min(cand.size() - 1, max_size);
            for (int s = 0; s <= limit; ++s) {
                for (std::uint64_t kb : by_size[static_cast<std::size_t>(s)]) {
                    if ((kb & ~cb) == 0) return;
                }
            }
            next.push_back(cand);
        });
    }
    transversals = std::move(next);
}

}  // namespace detail

// Berge sequential multiplication over the facets in storage order.
inline CoverFamily minimal_vertex_covers(const SimplicialComplex& c) {
    if (c.is_empty_face()) throw Error("no vertex cover of the empty facet");
    std::vector<VertexSet> transversals{VertexSet{}};
    for (VertexSet f : c.facets()) detail::berge_extend(transversals, f);
    std::sort(transversals.begin(), transversals.end());
    return CoverFamily{c.n(), std::move(transversals)};
}

// Exhaustive oracle: all 2^n subsets, keep the covers that lose the property
// when any single vertex is dropped.
inline CoverFamily minimal_vertex_covers_bruteforce(const SimplicialComplex& c) {
    if (c.n() > 20) throw Error("oracle cap exceeded: n=" + std::to_string(c.n()) + " > 20");
    if (c.is_empty_face()) throw Error("no vertex cover of the empty facet");
    CoverFamily out{c.n(), {}};
    const std::uint64_t limit = std::uint64_t{1} << c.n();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet s(bits);
        if (!is_vertex_cover(c, s)) continue;
        bool minimal = true;
        s.for_each([&](int v) {
            VertexSet smaller = s;
            smaller.erase(v);
            if (minimal && is_vertex_cover(c, smaller)) minimal = false;
        });
        if (minimal) out.covers.push_back(s);
    }
    std::sort(out.covers.begin(), out.covers.end());
    return out;
}

// The NF-complex: facets are complements of the minimal vertex covers. The
// facet ideal of {∅} is taken to be (0), whose Stanley-Reisner complex is
// the full simplex.
inline SimplicialComplex nf_step(const SimplicialComplex& c) {
    if (c.is_empty_face()) return SimplicialComplex::simplex(c.n());
    CoverFamily mins = minimal_vertex_covers(c);
    std::vector<VertexSet> facets;
    facets.reserve(mins.covers.size());
    for (VertexSet m : mins.covers) facets.push_back(m.complement(c.n()));
    return SimplicialComplex::from_antichain(c.n(), std::move(facets));
}

}  // namespace nflab
