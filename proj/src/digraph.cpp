#include "ocog/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocog {

Digraph::Digraph(Vertex n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    for (const auto& [u, v] : arcs_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("digraph: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("digraph: self-loop");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

UndirectedGraph::UndirectedGraph(Vertex n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool is_oriented(const Digraph& g) {
    for (const auto& [u, v] : g.arcs())
        if (u < v && g.has_arc(v, u)) return false;
    return true;
}

bool is_transitive(const Digraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.in_neighbors(v))
            for (Vertex w : g.out_neighbors(v))
                if (u != w && !g.has_arc(u, w)) return false;
    return true;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

bool is_tournament(const Digraph& g) {
    const Vertex n = g.vertex_count();
    if (2 * g.arc_count() != n * (n - 1)) return false;
    return is_oriented(g);
}

UndirectedGraph underlying(const Digraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) edges.emplace_back(u, v);
    return UndirectedGraph(g.vertex_count(), std::move(edges));
}

Digraph induced_subdigraph(const Digraph& g, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Vertex> rank(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subdigraph: vertex out of range");
        rank[s[i]] = static_cast<Vertex>(i);
    }
    std::vector<Arc> arcs;
    for (const auto& [u, v] : g.arcs())
        if (rank[u] >= 0 && rank[v] >= 0) arcs.emplace_back(rank[u], rank[v]);
    return Digraph(static_cast<Vertex>(s.size()), std::move(arcs));
}

Digraph disjoint_union(const std::vector<Digraph>& parts) {
    Vertex n = 0;
    std::vector<Arc> arcs;
    for (const Digraph& p : parts) {
        for (const auto& [u, v] : p.arcs()) arcs.emplace_back(n + u, n + v);
        n += p.vertex_count();
    }
    return Digraph(n, std::move(arcs));
}

Digraph order_composition(const std::vector<Digraph>& parts) {
    std::vector<Vertex> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const auto& [u, v] : parts[i].arcs())
            arcs.emplace_back(offset[i] + u, offset[i] + v);
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
                for (Vertex v = offset[j]; v < offset[j + 1]; ++v)
                    arcs.emplace_back(u, v);
    }
    return Digraph(offset.back(), std::move(arcs));
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (Vertex v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.in_neighbors(v).size());
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex w : g.out_neighbors(order[head]))
            if (--indeg[w] == 0) order.push_back(w);
    if (static_cast<Vertex>(order.size()) != n) return std::nullopt;
    return order;
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        std::vector<Vertex> comp;
        while (!queue.empty()) {
            Vertex u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string to_string(Pattern p) {
    switch (p) {
        case Pattern::BiorientedP2: return "BiorientedP2";
        case Pattern::D1: return "D1";
        case Pattern::D5: return "D5";
        case Pattern::UndirectedP4: return "UndirectedP4";
    }
    return "?";
}

namespace {

// Exactly the arcs {(a,b),(b,c)} among the triple.
bool induces_d1(const Digraph& g, Vertex a, Vertex b, Vertex c) {
    return g.has_arc(a, b) && g.has_arc(b, c) && !g.has_arc(b, a) && !g.has_arc(c, b) &&
           !g.has_arc(a, c) && !g.has_arc(c, a);
}

// Exactly the arcs {(a,b),(b,c),(c,a)} among the triple.
bool induces_d5(const Digraph& g, Vertex a, Vertex b, Vertex c) {
    return g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a) && !g.has_arc(b, a) &&
           !g.has_arc(c, b) && !g.has_arc(a, c);
}

bool induces_p4(const UndirectedGraph& u, Vertex a, Vertex b, Vertex c, Vertex d) {
    return u.has_edge(a, b) && u.has_edge(b, c) && u.has_edge(c, d) && !u.has_edge(a, c) &&
           !u.has_edge(a, d) && !u.has_edge(b, d);
}

}  // namespace

std::optional<PatternWitness> find_forbidden_pattern(const Digraph& g) {
    const Vertex n = g.vertex_count();
    for (const auto& [u, v] : g.arcs())
        if (u < v && g.has_arc(v, u)) return PatternWitness{Pattern::BiorientedP2, {u, v}};
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !g.has_arc(a, b)) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || !g.has_arc(b, c)) continue;
                if (induces_d1(g, a, b, c)) return PatternWitness{Pattern::D1, {a, b, c}};
                if (induces_d5(g, a, b, c)) return PatternWitness{Pattern::D5, {a, b, c}};
            }
        }
    const UndirectedGraph u = underlying(g);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !u.has_edge(a, b)) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || !u.has_edge(b, c) || u.has_edge(a, c)) continue;
                for (Vertex d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (induces_p4(u, a, b, c, d))
                        return PatternWitness{Pattern::UndirectedP4, {a, b, c, d}};
                }
            }
        }
    return std::nullopt;
}

bool witness_holds(const Digraph& g, const PatternWitness& w) {
    const auto& vs = w.vertices;
    for (Vertex v : vs)
        if (v < 0 || v >= g.vertex_count()) return false;
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    switch (w.pattern) {
        case Pattern::BiorientedP2:
            return vs.size() == 2 && g.has_arc(vs[0], vs[1]) && g.has_arc(vs[1], vs[0]);
        case Pattern::D1:
            return vs.size() == 3 && induces_d1(g, vs[0], vs[1], vs[2]);
        case Pattern::D5:
            return vs.size() == 3 && induces_d5(g, vs[0], vs[1], vs[2]);
        case Pattern::UndirectedP4:
            return vs.size() == 4 && induces_p4(underlying(g), vs[0], vs[1], vs[2], vs[3]);
    }
    return false;
}

}  // namespace ocog
