#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nflab/canon.hpp"
#include "nflab/dualize.hpp"
#include "nflab/orbit.hpp"

namespace nflab {

inline constexpr int kCensusMaxN = 5;

// Every non-void simplicial complex on [n], in storage order.
struct Universe {
    int n = 0;
    std::vector<SimplicialComplex> complexes;
};

// Antichains of nonempty subsets, built depth-first over subsets in
// decreasing bit-pattern order, plus {∅} standing in for the empty antichain.
inline Universe enumerate_complexes(int n) {
    if (n < 2 || n > kCensusMaxN) {
        throw Error("census cap: n=" + std::to_string(n) + " outside 2.." + std::to_string(kCensusMaxN));
    }
    Universe u{n, {SimplicialComplex::empty_face(n)}};
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::vector<VertexSet> chosen;
    auto dfs = [&](auto&& self, std::uint64_t next) -> void {
        if (!chosen.empty()) u.complexes.push_back(SimplicialComplex::from_antichain(n, chosen));
        for (std::uint64_t s = next; s >= 1; --s) {
            const VertexSet cand(s);
            const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](VertexSet c) {
                return cand.is_subset_of(c) || c.is_subset_of(cand);
            });
            if (comparable) continue;
            chosen.push_back(cand);
            self(self, s - 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, top);
    std::sort(u.complexes.begin(), u.complexes.end());
    return u;
}

namespace detail {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    return 1;
}

// images[i] = nf_step(u.complexes[i]), optionally split across threads.
inline std::vector<SimplicialComplex> step_images(const Universe& u, int threads) {
    std::vector<std::optional<SimplicialComplex>> slots(u.complexes.size());
    const std::size_t workers = static_cast<std::size_t>(resolve_threads(threads));
    auto work = [&](std::size_t begin) {
        for (std::size_t i = begin; i < u.complexes.size(); i += workers) slots[i] = nf_step(u.complexes[i]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    std::vector<SimplicialComplex> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace detail

struct BijectionReport {
    bool ok = true;
    // Pairs of universe indices with the same image.
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    // Indices whose image is not in the universe (cannot happen for valid output).
    std::vector<std::size_t> escapes;
};

namespace detail {

// image_index[i] = position of nf_step(complexes[i]) in the universe.
inline BijectionReport map_images(const Universe& u, const std::vector<SimplicialComplex>& images,
                                  std::vector<std::size_t>& image_index) {
    std::unordered_map<SimplicialComplex, std::size_t> position;
    position.reserve(u.complexes.size());
    for (std::size_t i = 0; i < u.complexes.size(); ++i) position.emplace(u.complexes[i], i);

    BijectionReport report;
    image_index.assign(u.complexes.size(), 0);
    std::vector<std::optional<std::size_t>> preimage(u.complexes.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto it = position.find(images[i]);
        if (it == position.end()) {
            report.escapes.push_back(i);
            continue;
        }
        image_index[i] = it->second;
        auto& pre = preimage[it->second];
        if (pre) {
            report.collisions.emplace_back(*pre, i);
        } else {
            pre = i;
        }
    }
    report.ok = report.collisions.empty() && report.escapes.empty();
    return report;
}

}  // namespace detail

inline BijectionReport verify_bijection(const Universe& u, int threads = 1) {
    std::vector<std::size_t> image_index;
    return detail::map_images(u, detail::step_images(u, threads), image_index);
}

inline BijectionReport verify_bijection(int n, int threads = 1) { return verify_bijection(enumerate_complexes(n), threads); }

struct CensusOptions {
    int threads = 1;
    // Also count classes modulo vertex relabeling.
    bool up_to_iso = false;
};

struct CensusReport {
    int n = 0;
    std::size_t universe_size = 0;
    BijectionReport bijection;
    std::size_t class_count = 0;
    // class size -> number of classes of that size
    std::map<std::size_t, std::size_t> size_histogram;
    // Storage-order minimum of each class, in sweep order.
    std::vector<SimplicialComplex> representatives;
    std::vector<std::size_t> class_sizes;
    std::optional<std::size_t> iso_class_count;
};

// Classes are the cycles of nf_step on the universe. The sweep starts each
// new class at the smallest unvisited complex in storage order, so that
// complex is the class representative.
inline CensusReport census(int n, const CensusOptions& opts = {}) {
    const Universe u = enumerate_complexes(n);
    CensusReport report;
    report.n = n;
    report.universe_size = u.complexes.size();

    std::vector<std::size_t> next;
    report.bijection = detail::map_images(u, detail::step_images(u, opts.threads), next);
    if (!report.bijection.ok) return report;

    std::vector<bool> visited(u.complexes.size(), false);
    std::vector<std::vector<VertexSet>> iso_keys;
    for (std::size_t start = 0; start < u.complexes.size(); ++start) {
        if (visited[start]) continue;
        std::size_t size = 0;
        std::optional<CanonicalForm> smallest;
        for (std::size_t i = start; !visited[i]; i = next[i]) {
            visited[i] = true;
            ++size;
            if (opts.up_to_iso) {
                CanonicalForm f = canonical_form(u.complexes[i]);
                if (!smallest || f.compare_encoding(*smallest) < 0) smallest = std::move(f);
            }
        }
        report.representatives.push_back(u.complexes[start]);
        report.class_sizes.push_back(size);
        ++report.size_histogram[size];
        if (smallest) iso_keys.push_back(std::move(smallest->encoding));
    }
    report.class_count = report.representatives.size();
    if (opts.up_to_iso) {
        std::sort(iso_keys.begin(), iso_keys.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        iso_keys.erase(std::unique(iso_keys.begin(), iso_keys.end()), iso_keys.end());
        report.iso_class_count = iso_keys.size();
    }
    return report;
}

inline std::size_t nf_class_count(int n, int threads = 1) { return census(n, CensusOptions{threads, false}).class_count; }

// The NF-equivalence class of c: its orbit up to (not including) the return.
inline std::vector<SimplicialComplex> class_of(const SimplicialComplex& c, const OrbitOptions& opts = {}) {
    std::vector<SimplicialComplex> members{c};
    SimplicialComplex cur = nf_step(c);
    for (std::uint64_t k = 1; cur != c; ++k) {
        if (k >= opts.iteration_cap) detail::cap_exceeded(c, opts.iteration_cap);
        members.push_back(cur);
        cur = nf_step(cur);
    }
    return members;
}

}  // namespace nflab
