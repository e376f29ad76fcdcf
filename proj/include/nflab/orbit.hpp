#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nflab/canon.hpp"
#include "nflab/dualize.hpp"

namespace nflab {

struct OrbitOptions {
    // Hard stop on nf_step applications; the orbit is finite but unbounded a priori.
    std::uint64_t iteration_cap = 10'000'000;
    // Traces keep at most this many full complexes; later steps are counted only.
    std::size_t trace_memory_cap = 1u << 16;
};

struct OrbitStep {
    std::uint64_t k = 0;
    SimplicialComplex complex;
    int dim = 0;
    bool isomorphic_to_start = false;
};

struct OrbitTrace {
    std::vector<OrbitStep> steps;
    // Unset when `limit` ran out before the event was seen.
    std::optional<std::uint64_t> nf_number;
    std::optional<std::uint64_t> period;
    // Steps computed but not stored because of trace_memory_cap.
    std::uint64_t dropped_steps = 0;
};

// delta^(k): k-fold application of nf_step, k = 0 gives the input back.
inline SimplicialComplex nf_iterate(const SimplicialComplex& c, std::uint64_t k) {
    SimplicialComplex cur = c;
    for (std::uint64_t i = 0; i < k; ++i) cur = nf_step(cur);
    return cur;
}

namespace detail {

// Isomorphism-to-start test with the start's canonical form cached.
class StartMatcher {
public:
    explicit StartMatcher(const SimplicialComplex& start) : start_(start), invariant_(iso_invariant(start)) {}

    bool isomorphic(const SimplicialComplex& c) {
        if (c == start_) return true;
        if (c.facet_count() != start_.facet_count()) return false;
        if (iso_invariant(c) != invariant_) return false;
        if (!form_) form_ = canonical_form(start_);
        return canonical_form(c).same_class(*form_);
    }

private:
    const SimplicialComplex& start_;
    IsoInvariant invariant_;
    std::optional<CanonicalForm> form_;
};

[[noreturn]] inline void cap_exceeded(const SimplicialComplex& c, std::uint64_t cap) {
    throw Error("orbit iteration cap " + std::to_string(cap) + " reached without returning to start (n=" +
                std::to_string(c.n()) + ", " + std::to_string(c.facet_count()) + " facets)");
}

}  // namespace detail

// Smallest t >= 1 with delta^(t) isomorphic to the input.
inline std::uint64_t nf_number(const SimplicialComplex& c, const OrbitOptions& opts = {}) {
    detail::StartMatcher matcher(c);
    SimplicialComplex cur = c;
    for (std::uint64_t k = 1; k <= opts.iteration_cap; ++k) {
        cur = nf_step(cur);
        if (matcher.isomorphic(cur)) return k;
    }
    detail::cap_exceeded(c, opts.iteration_cap);
}

// Smallest q >= 1 with delta^(q) equal to the input.
inline std::uint64_t nf_period(const SimplicialComplex& c, const OrbitOptions& opts = {}) {
    SimplicialComplex cur = c;
    for (std::uint64_t k = 1; k <= opts.iteration_cap; ++k) {
        cur = nf_step(cur);
        if (cur == c) return k;
    }
    detail::cap_exceeded(c, opts.iteration_cap);
}

struct OrbitSummary {
    std::uint64_t nf_number = 0;
    std::uint64_t period = 0;
};

// Both numbers in one pass; isomorphism is tested only until first seen.
inline OrbitSummary orbit_summary(const SimplicialComplex& c, const OrbitOptions& opts = {}) {
    detail::StartMatcher matcher(c);
    OrbitSummary out;
    SimplicialComplex cur = c;
    for (std::uint64_t k = 1; k <= opts.iteration_cap; ++k) {
        cur = nf_step(cur);
        if (cur == c) {
            if (out.nf_number == 0) out.nf_number = k;
            out.period = k;
            return out;
        }
        if (out.nf_number == 0 && matcher.isomorphic(cur)) out.nf_number = k;
    }
    detail::cap_exceeded(c, opts.iteration_cap);
}

// Records delta^(0..) until the orbit closes or `limit` steps past the start.
inline OrbitTrace orbit_trace(const SimplicialComplex& c, std::uint64_t limit, const OrbitOptions& opts = {}) {
    if (limit < 1) throw Error("trace limit must be >= 1");
    detail::StartMatcher matcher(c);
    OrbitTrace trace;
    trace.steps.push_back(OrbitStep{0, c, c.dimension(), true});
    SimplicialComplex cur = c;
    const std::uint64_t bound = std::min(limit, opts.iteration_cap);
    for (std::uint64_t k = 1; k <= bound; ++k) {
        cur = nf_step(cur);
        const bool equal = cur == c;
        const bool iso = equal || matcher.isomorphic(cur);
        if (iso && !trace.nf_number) trace.nf_number = k;
        if (trace.steps.size() < opts.trace_memory_cap) {
            trace.steps.push_back(OrbitStep{k, cur, cur.dimension(), iso});
        } else {
            ++trace.dropped_steps;
        }
        if (equal) {
            trace.period = k;
            break;
        }
    }
    return trace;
}

}  // namespace nflab
