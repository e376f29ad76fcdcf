#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "nflab/complex.hpp"

namespace nflab {

// Permutation-invariant encoding of a complex plus a witness relabeling.
//
// `encoding` is the sorted facet list of `witness` applied to the source.
// Two complexes are isomorphic iff their canonical forms have equal n and
// equal encodings.
struct CanonicalForm {
    int n = 0;
    std::vector<VertexSet> encoding;
    Permutation witness;

    bool same_class(const CanonicalForm& o) const { return n == o.n && encoding == o.encoding; }

    // n first, then facet count, then facets lexicographically.
    std::strong_ordering compare_encoding(const CanonicalForm& o) const {
        if (auto c = n <=> o.n; c != 0) return c;
        if (auto c = encoding.size() <=> o.encoding.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(encoding.begin(), encoding.end(), o.encoding.begin(),
                                                      o.encoding.end());
    }
};

namespace detail {

// Canonical labeling by individualization-refinement on the vertex/facet
// incidence structure. Colors are ranks in an ordered partition; refinement
// and the choice of target cell depend only on colors, so the set of leaf
// relabelings is invariant under relabeling the input. The form is the
// smallest leaf encoding. Automorphisms discovered at equal leaves prune
// sibling branches in the same orbit of the pointwise prefix stabilizer.
class CanonSearch {
public:
    explicit CanonSearch(const SimplicialComplex& c) : c_(c), n_(c.n()) {
        incident_.resize(static_cast<std::size_t>(n_));
        for (std::size_t fi = 0; fi < c.facets().size(); ++fi) {
            c.facets()[fi].for_each([&](int v) { incident_[static_cast<std::size_t>(v - 1)].push_back(fi); });
        }
    }

    CanonicalForm run() {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        refine(colors);
        std::vector<int> prefix;
        search(colors, prefix);
        return CanonicalForm{n_, best_encoding_, best_perm_};
    }

private:
    using Colors = std::vector<int>;

    static int cell_count(const Colors& colors) {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    }

    // Iterated color refinement: a vertex's new color is the rank of
    // (old color, sorted multiset of the color-multisets of its facets).
    void refine(Colors& colors) const {
        const auto& facets = c_.facets();
        std::vector<std::vector<int>> facet_sig(facets.size());
        struct Key {
            int color;
            std::vector<std::vector<int>> sig;
            std::size_t vertex;
        };
        int cells = cell_count(colors);
        while (true) {
            for (std::size_t fi = 0; fi < facets.size(); ++fi) {
                auto& s = facet_sig[fi];
                s.clear();
                facets[fi].for_each([&](int v) { s.push_back(colors[static_cast<std::size_t>(v - 1)]); });
                std::sort(s.begin(), s.end());
            }
            std::vector<Key> keys;
            keys.reserve(static_cast<std::size_t>(n_));
            for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v) {
                Key k{colors[v], {}, v};
                k.sig.reserve(incident_[v].size());
                for (std::size_t fi : incident_[v]) k.sig.push_back(facet_sig[fi]);
                std::sort(k.sig.begin(), k.sig.end());
                keys.push_back(std::move(k));
            }
            std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
                if (a.color != b.color) return a.color < b.color;
                return a.sig < b.sig;
            });
            int rank = 0;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (i > 0 && (keys[i].color != keys[i - 1].color || keys[i].sig != keys[i - 1].sig)) ++rank;
                colors[keys[i].vertex] = rank;
            }
            const int refined = rank + 1;
            if (refined == cells || refined == n_) return;
            cells = refined;
        }
    }

    std::vector<VertexSet> leaf_encoding(const Permutation& perm) const {
        std::vector<VertexSet> out;
        out.reserve(c_.facets().size());
        for (VertexSet f : c_.facets()) out.push_back(perm.apply(f));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Returns the depth to unwind to: the search resumes at that level.
    // Returning `depth` itself means "continue normally here".
    std::size_t search(const Colors& colors, std::vector<int>& prefix) {
        const std::size_t depth = prefix.size();
        if (cell_count(colors) == n_) return at_leaf(colors, prefix);

        // First non-singleton cell.
        std::vector<int> sizes(static_cast<std::size_t>(n_), 0);
        for (int col : colors) ++sizes[static_cast<std::size_t>(col)];
        int target = 0;
        while (sizes[static_cast<std::size_t>(target)] == 1) ++target;

        std::vector<int> explored;
        for (int w = 0; w < n_; ++w) {
            if (colors[static_cast<std::size_t>(w)] != target) continue;
            if (!explored.empty() && in_explored_orbit(prefix, explored, w)) continue;
            explored.push_back(w);

            Colors child = colors;
            for (auto& col : child) {
                if (col > target) ++col;
            }
            for (int u = 0; u < n_; ++u) {
                if (u != w && colors[static_cast<std::size_t>(u)] == target) child[static_cast<std::size_t>(u)] = target + 1;
            }
            refine(child);
            prefix.push_back(w);
            const std::size_t unwind = search(child, prefix);
            prefix.pop_back();
            if (unwind < depth) return unwind;
        }
        return depth;
    }

    std::size_t at_leaf(const Colors& colors, const std::vector<int>& prefix) {
        std::vector<int> images(static_cast<std::size_t>(n_));
        for (std::size_t v = 0; v < images.size(); ++v) images[v] = colors[v] + 1;
        Permutation perm = Permutation::from_images(images);
        std::vector<VertexSet> enc = leaf_encoding(perm);

        if (!have_best_) {
            have_best_ = true;
            best_encoding_ = std::move(enc);
            best_perm_ = perm;
            best_path_ = prefix;
            first_path_ = prefix;
            first_perm_ = perm;
            first_encoding_ = best_encoding_;
            return prefix.size();
        }

        auto record_automorphism = [&](const Permutation& other, const std::vector<int>& other_path) {
            // perm(c) == other(c), so other^-1 . perm fixes c.
            automorphisms_.push_back(perm.then(other.inverse()));
            std::size_t d = 0;
            while (d < prefix.size() && d < other_path.size() && prefix[d] == other_path[d]) ++d;
            return d;
        };

        if (enc == best_encoding_) return record_automorphism(best_perm_, best_path_);
        if (first_perm_ != best_perm_ && enc == first_encoding_) {
            return record_automorphism(first_perm_, first_path_);
        }
        if (std::lexicographical_compare(enc.begin(), enc.end(), best_encoding_.begin(), best_encoding_.end())) {
            best_encoding_ = std::move(enc);
            best_perm_ = perm;
            best_path_ = prefix;
        }
        return prefix.size();
    }

    // Orbit test under the automorphisms found so far that fix the current
    // prefix pointwise.
    bool in_explored_orbit(const std::vector<int>& prefix, const std::vector<int>& explored, int w) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const Permutation& g : automorphisms_) {
            bool fixes = true;
            for (int p : prefix) {
                if (g(p + 1) != p + 1) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int a = find(v);
                int b = find(g(v + 1) - 1);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        const int root = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    const SimplicialComplex& c_;
    int n_;
    std::vector<std::vector<std::size_t>> incident_;

    bool have_best_ = false;
    std::vector<VertexSet> best_encoding_;
    Permutation best_perm_;
    std::vector<int> best_path_;
    Permutation first_perm_;
    std::vector<VertexSet> first_encoding_;
    std::vector<int> first_path_;
    std::vector<Permutation> automorphisms_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const SimplicialComplex& c) { return detail::CanonSearch(c).run(); }

// Relabeling-invariant summary used to reject non-isomorphic pairs before
// running the canonical search.
struct IsoInvariant {
    int n = 0;
    std::vector<int> facet_sizes;
    std::vector<std::vector<int>> vertex_profiles;

    bool operator==(const IsoInvariant&) const = default;
};

inline IsoInvariant iso_invariant(const SimplicialComplex& c) {
    IsoInvariant inv;
    inv.n = c.n();
    const int width = c.dimension() + 2;
    inv.vertex_profiles.assign(static_cast<std::size_t>(c.n()), std::vector<int>(static_cast<std::size_t>(width), 0));
    for (VertexSet f : c.facets()) {
        inv.facet_sizes.push_back(f.size());
        f.for_each([&](int v) { ++inv.vertex_profiles[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(f.size())]; });
    }
    std::sort(inv.vertex_profiles.begin(), inv.vertex_profiles.end());
    return inv;
}

// Witness pi with pi(a) == b when the two are isomorphic.
inline std::optional<Permutation> isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n() != b.n() || a.facet_count() != b.facet_count()) return std::nullopt;
    if (iso_invariant(a) != iso_invariant(b)) return std::nullopt;
    const CanonicalForm ca = canonical_form(a);
    const CanonicalForm cb = canonical_form(b);
    if (!ca.same_class(cb)) return std::nullopt;
    return ca.witness.then(cb.witness.inverse());
}

inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return isomorphism(a, b).has_value();
}

}  // namespace nflab
