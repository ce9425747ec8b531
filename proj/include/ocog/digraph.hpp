#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ocog {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;  // normalized to first < second

//! Loop-free digraph on vertex ids 0..n-1.
//!
//! Arcs are kept sorted and duplicate-free. Opposite arc pairs are allowed
//! (the digraph is then not oriented); self-loops are rejected.
class Digraph {
public:
    Digraph() = default;

    // Merges duplicate arcs; throws std::invalid_argument on self-loops or
    // out-of-range endpoints.
    Digraph(Vertex n, std::vector<Arc> arcs);

    Vertex vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(Vertex u, Vertex v) const;
    const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[u]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    Vertex n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

//! Simple undirected graph on vertex ids 0..n-1; edges normalized to u < v.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(Vertex n, std::vector<Edge> edges);

    Vertex vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }

    bool operator==(const UndirectedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// True iff no arc has its opposite present.
bool is_oriented(const Digraph& g);

// True iff (u,v),(v,w) in A with u != w implies (u,w) in A.
bool is_transitive(const Digraph& g);

bool is_acyclic(const Digraph& g);
bool is_tournament(const Digraph& g);

UndirectedGraph underlying(const Digraph& g);

// The subset s is sorted and deduplicated; its vertices are re-indexed to
// 0..|s|-1 in that order. Throws on out-of-range ids.
Digraph induced_subdigraph(const Digraph& g, std::vector<Vertex> s);

Digraph disjoint_union(const std::vector<Digraph>& parts);

// Disjoint union plus every arc from each vertex of part i to each vertex of
// part j, for i < j.
Digraph order_composition(const std::vector<Digraph>& parts);

// Empty optional iff g has a directed cycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& g);

// Components listed by ascending minimum vertex; each component sorted.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

enum class Pattern { BiorientedP2, D1, D5, UndirectedP4 };

std::string to_string(Pattern p);

//! An induced forbidden configuration certifying that a digraph is not an
//! oriented co-graph. D1 is the chordless directed path u->v->w with u, w
//! non-adjacent; D5 is the directed triangle u->v->w->u.
struct PatternWitness {
    Pattern pattern;
    std::vector<Vertex> vertices;

    bool operator==(const PatternWitness&) const = default;
};

// Scans for an induced bioriented P2 first, then D1/D5 over lexicographic
// vertex triples (D1 tested before D5 on each triple), then P4 in the
// underlying graph over lexicographic 4-tuples. Returns the first hit.
// Absent iff g is oriented, transitive and un(g) is P4-free.
std::optional<PatternWitness> find_forbidden_pattern(const Digraph& g);

// Re-checks that w.pattern is induced on w.vertices in g.
bool witness_holds(const Digraph& g, const PatternWitness& w);

}  // namespace ocog
