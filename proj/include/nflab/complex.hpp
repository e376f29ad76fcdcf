#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nflab/error.hpp"
#include "nflab/vertex_set.hpp"

namespace nflab {

// Bijection on [n]. Stored 0-based; the public surface is 1-based.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.image_.resize(static_cast<std::size_t>(n));
        std::iota(p.image_.begin(), p.image_.end(), 0);
        return p;
    }

    // images[i-1] = pi(i), values 1-based.
    static Permutation from_images(std::span<const int> images) {
        Permutation p;
        const int n = static_cast<int>(images.size());
        std::vector<bool> hit(images.size(), false);
        p.image_.reserve(images.size());
        for (int img : images) {
            if (img < 1 || img > n || hit[static_cast<std::size_t>(img - 1)]) {
                throw Error("permutation is not a bijection on [" + std::to_string(n) + "]");
            }
            hit[static_cast<std::size_t>(img - 1)] = true;
            p.image_.push_back(img - 1);
        }
        return p;
    }
    static Permutation from_images(std::initializer_list<int> images) {
        return from_images(std::span<const int>(images.begin(), images.size()));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[static_cast<std::size_t>(v - 1)] + 1; }

    VertexSet apply(VertexSet s) const {
        std::uint64_t out = 0;
        s.for_each([&](int v) { out |= std::uint64_t{1} << image_[static_cast<std::size_t>(v - 1)]; });
        return VertexSet(out);
    }

    Permutation inverse() const {
        Permutation p;
        p.image_.resize(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) p.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
        return p;
    }

    // (a.then(b))(v) = b(a(v))
    Permutation then(const Permutation& b) const {
        Permutation p;
        p.image_.resize(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) p.image_[i] = b.image_[static_cast<std::size_t>(image_[i])];
        return p;
    }

    std::vector<int> images() const {
        std::vector<int> out;
        out.reserve(image_.size());
        for (int i : image_) out.push_back(i + 1);
        return out;
    }

    // "(1 3 2)(4 5)", "()" for the identity.
    std::string cycle_notation() const {
        std::string out;
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t start = 0; start < image_.size(); ++start) {
            if (seen[start] || image_[start] == static_cast<int>(start)) continue;
            out += '(';
            std::size_t v = start;
            bool first = true;
            while (!seen[v]) {
                seen[v] = true;
                if (!first) out += ' ';
                out += std::to_string(v + 1);
                first = false;
                v = static_cast<std::size_t>(image_[v]);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// A simplicial complex on [n], identified with its antichain of facets.
//
// Facets are kept sorted by (cardinality, bit pattern), so two complexes are
// equal iff their facet lists are. The complex {∅} is the single facet ∅.
// The void complex (no faces at all) is not representable.
class SimplicialComplex {
public:
    // Maximal elements of `faces`, deduplicated and sorted.
    static SimplicialComplex from_faces(int n, std::vector<VertexSet> faces) {
        check_ground_set(n);
        if (faces.empty()) throw Error("void complex not supported");
        const VertexSet ground = VertexSet::full(n);
        for (VertexSet f : faces) {
            if (!f.is_subset_of(ground)) {
                throw Error("face " + f.to_string() + " has a vertex > n=" + std::to_string(n));
            }
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        // Sorted by cardinality, so a face can only be contained in a later one.
        std::vector<VertexSet> maximal;
        maximal.reserve(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = faces.size(); j-- > i + 1;) {
                if (faces[j].size() == faces[i].size()) break;
                if (faces[i].is_subset_of(faces[j])) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) maximal.push_back(faces[i]);
        }
        return SimplicialComplex(n, std::move(maximal));
    }

    // Caller guarantees `facets` is already an antichain inside [n]; only sorts.
    static SimplicialComplex from_antichain(int n, std::vector<VertexSet> facets) {
        check_ground_set(n);
        if (facets.empty()) throw Error("void complex not supported");
        std::sort(facets.begin(), facets.end());
        return SimplicialComplex(n, std::move(facets));
    }

    static SimplicialComplex empty_face(int n) { return from_antichain(n, {VertexSet{}}); }
    static SimplicialComplex simplex(int n) { return from_antichain(n, {VertexSet::full(n)}); }

    int n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    // True for the complex {∅}.
    bool is_empty_face() const { return facets_.size() == 1 && facets_.front().empty(); }

    // Max facet cardinality minus one; -1 for {∅}.
    int dimension() const { return facets_.back().size() - 1; }

    SimplicialComplex permuted(const Permutation& pi) const {
        if (pi.size() != n_) {
            throw Error("permutation acts on [" + std::to_string(pi.size()) + "], complex lives on [" +
                        std::to_string(n_) + "]");
        }
        std::vector<VertexSet> out;
        out.reserve(facets_.size());
        for (VertexSet f : facets_) out.push_back(pi.apply(f));
        return from_antichain(n_, std::move(out));
    }

    // "⟨{1,2},{2,3}⟩", "{∅}" for the empty-face complex.
    std::string to_string() const {
        if (is_empty_face()) return "{∅}";
        std::string s = "⟨";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += ',';
            s += facets_[i].to_string();
        }
        return s + "⟩";
    }

    bool operator==(const SimplicialComplex&) const = default;

    // Storage order: n, then facet count, then the facet list lexicographically.
    std::strong_ordering operator<=>(const SimplicialComplex& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        if (auto c = facets_.size() <=> o.facets_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(facets_.begin(), facets_.end(), o.facets_.begin(),
                                                      o.facets_.end());
    }

private:
    SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

    static void check_ground_set(int n) {
        if (n < 1 || n > kMaxVertices) {
            throw Error("n=" + std::to_string(n) + " outside supported range 1.." + std::to_string(kMaxVertices));
        }
    }

    int n_ = 0;
    std::vector<VertexSet> facets_;
};

inline SimplicialComplex from_faces(int n, std::vector<VertexSet> faces) {
    return SimplicialComplex::from_faces(n, std::move(faces));
}

inline int dimension(const SimplicialComplex& c) { return c.dimension(); }

inline SimplicialComplex apply_permutation(const SimplicialComplex& c, const Permutation& pi) {
    return c.permuted(pi);
}

}  // namespace nflab

template <>
struct std::hash<nflab::SimplicialComplex> {
    std::size_t operator()(const nflab::SimplicialComplex& c) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(c.n());
        for (nflab::VertexSet f : c.facets()) {
            h ^= f.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};
