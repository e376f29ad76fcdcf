#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nflab/error.hpp"

namespace nflab {

inline constexpr int kMaxVertices = 64;

// Subset of [n] packed into one word. Vertex v (1-based) lives at bit v-1.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet from_vertices(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    // {1, ..., n}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const {
        return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1u) != 0;
    }

    void insert(int v) {
        if (v < 1 || v > kMaxVertices) {
            throw Error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertices));
        }
        bits_ |= std::uint64_t{1} << (v - 1);
    }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    // Largest vertex present, 0 for the empty set.
    constexpr int max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    // Complement inside [n].
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
    }

    constexpr bool operator==(const VertexSet&) const = default;

    // Storage order: cardinality first, then numeric bit pattern.
    constexpr std::strong_ordering operator<=>(const VertexSet& o) const {
        if (auto c = size() <=> o.size(); c != 0) return c;
        return bits_ <=> o.bits_;
    }

    // "{1,3}" / "∅"
    std::string to_string() const {
        if (empty()) return "∅";
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace nflab
