#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ocog/algorithms.hpp"
#include "ocog/digraph.hpp"

namespace ocog {

//! Caps for the brute-force routines; inputs beyond the caps are refused
//! with BudgetError instead of running unbounded.
struct OracleBudget {
    int max_vertices = 8;
    std::uint64_t max_candidates = 50'000'000;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CancelledError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Cooperative cancellation for long enumerations; set stop from another
//! thread and the running oracle throws CancelledError.
struct CancelToken {
    std::atomic<bool> stop{false};
};

// Smallest number of classes over all vertex partitions admitting a valid
// oriented coloring; enumerates colorings in first-occurrence canonical form
// (vertex 0 is always class 1) for k = 1..n. Throws on non-oriented input
// or budget overrun.
int brute_chromatic(const Digraph& g, const OracleBudget& budget = {},
                    const CancelToken* cancel = nullptr);

// First valid oriented coloring with at most k classes found by the same
// enumeration, if any.
std::optional<OrientedColoring> brute_oriented_coloring(const Digraph& g, int k,
                                                        const OracleBudget& budget = {},
                                                        const CancelToken* cancel = nullptr);

// Maximum number of arcs over all directed vertex-simple paths. Dynamic
// program over a topological order for acyclic inputs (no size cap);
// exhaustive path search otherwise (capped).
int brute_longest_path(const Digraph& g, const OracleBudget& budget = {},
                       const CancelToken* cancel = nullptr);

// True iff some vertex bijection maps the arc set of g1 exactly onto that of
// g2; backtracking with in/out-degree pruning (capped).
bool brute_isomorphic(const Digraph& g1, const Digraph& g2, const OracleBudget& budget = {},
                      const CancelToken* cancel = nullptr);

// True iff g contains a directed walk with exactly k arcs, i.e. admits a
// homomorphism from the oriented path on k+1 vertices; k-step reachability
// iteration with repeat detection, so k may be arbitrarily large.
bool brute_path_hom_exists(const Digraph& g, long long k, const OracleBudget& budget = {});

}  // namespace ocog
