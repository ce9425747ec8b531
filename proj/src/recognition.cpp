#include "ocog/recognition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ocog {

namespace {

// Connected components of un(g) restricted to verts; each sorted, list
// ordered by minimum vertex.
std::vector<std::vector<Vertex>> components_within(const UndirectedGraph& un,
                                                   const std::vector<Vertex>& verts) {
    std::vector<char> member(un.vertex_count(), 0), seen(un.vertex_count(), 0);
    for (Vertex v : verts) member[v] = 1;
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    for (Vertex s : verts) {
        if (seen[s]) continue;
        seen[s] = 1;
        queue.assign(1, s);
        std::vector<Vertex> comp;
        while (!queue.empty()) {
            Vertex u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            for (Vertex w : un.neighbors(u))
                if (member[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Components of the complement of un(g) restricted to verts, via the
// shrinking-candidate-set walk (the complement is never materialized).
std::vector<std::vector<Vertex>> co_components_within(const UndirectedGraph& un,
                                                      const std::vector<Vertex>& verts) {
    std::vector<Vertex> remaining(verts);
    std::sort(remaining.begin(), remaining.end());
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    while (!remaining.empty()) {
        Vertex s = remaining.front();
        remaining.erase(remaining.begin());
        queue.assign(1, s);
        std::vector<Vertex> comp;
        while (!queue.empty()) {
            Vertex u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            std::vector<Vertex> keep;
            keep.reserve(remaining.size());
            for (Vertex w : remaining) {
                if (un.has_edge(u, w)) {
                    keep.push_back(w);
                } else {
                    queue.push_back(w);
                }
            }
            remaining = std::move(keep);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct Decomposer {
    const Digraph& g;
    const UndirectedGraph un;
    CoExpr::Builder builder;

    explicit Decomposer(const Digraph& graph) : g(graph), un(underlying(graph)) {}

    // Empty optional when verts does not induce an oriented co-graph.
    std::optional<NodeId> build(const std::vector<Vertex>& verts) {
        if (verts.size() == 1) return builder.add_leaf(verts[0]);

        auto comps = components_within(un, verts);
        if (comps.size() > 1) {
            std::vector<NodeId> children;
            children.reserve(comps.size());
            for (const auto& comp : comps) {
                auto child = build(comp);
                if (!child) return std::nullopt;
                children.push_back(*child);
            }
            return builder.add_node(NodeKind::Union, children);
        }

        auto parts = co_components_within(un, verts);
        if (parts.size() < 2) return std::nullopt;  // connected and co-connected

        return build_order(parts);
    }

    // Checks that all arcs between any two co-components exist and share one
    // direction, orders the parts by those directions, and verifies the
    // relation is a total order.
    std::optional<NodeId> build_order(const std::vector<std::vector<Vertex>>& parts) {
        const int k = static_cast<int>(parts.size());
        std::vector<int> part_of(g.vertex_count(), -1);
        for (int i = 0; i < k; ++i)
            for (Vertex v : parts[i]) part_of[v] = i;

        std::vector<long long> cnt(static_cast<std::size_t>(k) * k, 0);
        for (int i = 0; i < k; ++i)
            for (Vertex u : parts[i])
                for (Vertex w : g.out_neighbors(u)) {
                    int j = part_of[w];
                    if (j >= 0 && j != i) ++cnt[i * k + j];
                }

        // follows[i][j]: every arc between parts i and j runs i -> j.
        std::vector<char> follows(static_cast<std::size_t>(k) * k, 0);
        std::vector<int> wins(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const long long all =
                    static_cast<long long>(parts[i].size()) * static_cast<long long>(parts[j].size());
                const long long fwd = cnt[i * k + j], rev = cnt[j * k + i];
                if (fwd == all && rev == 0) {
                    follows[i * k + j] = 1;
                    ++wins[i];
                } else if (rev == all && fwd == 0) {
                    follows[j * k + i] = 1;
                    ++wins[j];
                } else {
                    return std::nullopt;  // missing, mixed or bidirected arcs
                }
            }

        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return wins[a] > wins[b]; });
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (!follows[order[a] * k + order[b]]) return std::nullopt;  // not a total order

        std::vector<NodeId> children;
        children.reserve(k);
        for (int i : order) {
            auto child = build(parts[i]);
            if (!child) return std::nullopt;
            children.push_back(*child);
        }
        return builder.add_node(NodeKind::Order, children);
    }
};

}  // namespace

RecognitionOutcome recognize(const Digraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("recognize: empty digraph");
    Decomposer dec(g);
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (auto root = dec.build(all)) {
        // The decomposition alternates by construction; canonicalize anyway.
        return RecognitionOutcome(canonicalize(dec.builder.finish(*root)));
    }
    auto w = find_forbidden_pattern(g);
    if (!w) throw std::logic_error("recognize: decomposition failed without a witness");
    return RecognitionOutcome(std::move(*w));
}

bool is_oriented_cograph(const Digraph& g) { return !find_forbidden_pattern(g).has_value(); }

}  // namespace ocog
