#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocog/cotree.hpp"
#include "ocog/digraph.hpp"
#include "ocog/oracle.hpp"

namespace ocog {

// Each unordered vertex pair independently gets no arc, a forward arc or a
// backward arc. Deterministic for fixed (n, seed).
Digraph random_oriented_digraph(int n, std::uint64_t seed);

// Every loop-free digraph on n vertices (opposite arc pairs included);
// 2^(n(n-1)) graphs, so n <= 4 in practice.
std::vector<Digraph> all_loopfree_digraphs(int n);

// Every oriented digraph on n vertices; 3^(n(n-1)/2) graphs.
std::vector<Digraph> all_oriented_digraphs(int n);

// Randomly permutes the child order of every union node; the evaluated
// digraph changes only by vertex order, so isomorphism is preserved.
CanonicalCoExpr shuffle_union_children(const CanonicalCoExpr& t, std::uint64_t seed);

// Applies a random permutation to the leaf vertex ids.
CanonicalCoExpr permute_leaf_ids(const CanonicalCoExpr& t, std::uint64_t seed);

// Relabels a digraph's vertices by a random permutation.
Digraph permute_vertices(const Digraph& g, std::uint64_t seed);

//! Scale and determinism knobs for the cross-validation runner.
struct CheckParams {
    int n_max = 8;               // max tree leaves / digraph vertices
    std::uint64_t seed = 1;      // base seed; every property derives from it
    int trials = 200;            // random cases per property
    OracleBudget budget;
    bool inject_fault = false;   // test hook: deliberately breaks one comparison
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail;  // first failure
};

struct CheckReport {
    std::vector<PropertyResult> results;
    bool all_pass = true;
};

// Runs every cross-validation property of the library at desk scale:
// fast-vs-oracle agreement, recognition round trips, composition rules,
// homomorphism duality and isomorphism correctness. Deterministic given the
// params.
CheckReport run_check(const CheckParams& params);

}  // namespace ocog
