#pragma once

#include <optional>
#include <vector>

#include "ocog/cotree.hpp"
#include "ocog/digraph.hpp"

namespace ocog {

//! An oriented coloring candidate: color[v] in 1..k for every vertex v,
//! colors forming the contiguous range 1..k.
struct OrientedColoring {
    std::vector<int> color;
    int k = 0;
};

//! Per-tree-node bookkeeping of the labeling traversal: the subtree below u
//! is colored with exactly the range in[u]..out[u]; leaves also record their
//! assigned color (internal nodes keep color[u] = -1).
struct LabelState {
    std::vector<int> in;
    std::vector<int> out;
    std::vector<int> color;
};

struct LabelResult {
    OrientedColoring coloring;
    LabelState state;
};

struct ChiOmega {
    int chromatic;
    int clique;
};

// True iff color classes are independent sets and, for any two classes, all
// arcs between them share one direction. Throws std::invalid_argument when
// the coloring does not cover every vertex or uses colors outside 1..k.
bool verify_oriented_coloring(const Digraph& g, const OrientedColoring& c);

//! Optimal oriented coloring by depth-first traversal of the canonical tree,
//! children left to right: a leaf takes color i; an internal node starts its
//! children at i, resetting to in[u] after each child of a union node and to
//! out[child]+1 after each child of an order node. Uses exactly out[root]
//! colors, which equals the oriented chromatic number of evaluate(t).
LabelResult label_coloring(const CanonicalCoExpr& t);

// Direct recursion: leaf -> 1, union -> max of children, order -> sum.
// Equals out[root] of label_coloring.
int chromatic_number(const CanonicalCoExpr& t);

// Number of arcs on a longest oriented path: leaf -> 0, union -> max,
// order -> sum of children plus (arity - 1).
int longest_path_length(const CanonicalCoExpr& t);

// Chromatic and clique number of the underlying undirected graph, both by
// the co-tree recursion (union -> max, order -> sum); each equals
// chromatic_number(t).
ChiOmega undirected_chromatic_and_clique(const CanonicalCoExpr& t);

// A mapping h with h(u) < h(v) for every arc (u,v), into 1..k, if one
// exists. Computed as a longest-path level assignment when g is acyclic and
// by exhaustive search otherwise. Throws if g is not oriented.
std::optional<std::vector<int>> hom_to_transitive_tournament(const Digraph& g, int k);

// True iff the oriented chromatic number equals the vertex count, iff t has
// no union node, iff evaluate(t) is a transitive tournament; all three are
// computed and must agree.
bool is_oriented_clique(const CanonicalCoExpr& t);

//! Level-by-level bottom-up labeling of two canonical trees: per level the
//! nodes' signatures (children's integer labels, sorted for union nodes,
//! kept in order for order nodes) are collected, the two sorted sequences
//! compared, and distinct signatures mapped through one shared bijection to
//! integer ranks for the next level. False immediately on differing leaf
//! counts, heights or root kinds. True iff evaluate(t1) and evaluate(t2)
//! are isomorphic digraphs.
bool cotree_isomorphic(const CanonicalCoExpr& t1, const CanonicalCoExpr& t2);

}  // namespace ocog
