#include "ocog/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace ocog {

namespace {

void check_cancel(const CancelToken* cancel) {
    if (cancel && cancel->stop.load(std::memory_order_relaxed))
        throw CancelledError("oracle: cancelled");
}

}  // namespace

std::optional<OrientedColoring> brute_oriented_coloring(const Digraph& g, int k,
                                                        const OracleBudget& budget,
                                                        const CancelToken* cancel) {
    if (!is_oriented(g))
        throw std::invalid_argument("brute_oriented_coloring: digraph is not oriented");
    const Vertex n = g.vertex_count();
    if (n > budget.max_vertices)
        throw BudgetError("brute_oriented_coloring: vertex budget exceeded");
    if (n == 0) return OrientedColoring{{}, 0};
    if (k < 1) return std::nullopt;

    std::vector<int> color(n, 0);
    std::vector<int> prefix_max(n + 1, 0);
    std::uint64_t tried = 0;
    auto independent = [&](Vertex v, int val) {
        for (Vertex u : g.in_neighbors(v))
            if (u < v && color[u] == val) return false;
        for (Vertex u : g.out_neighbors(v))
            if (u < v && color[u] == val) return false;
        return true;
    };
    Vertex v = 0;
    while (true) {
        check_cancel(cancel);
        const int limit = std::min(prefix_max[v] + 1, k);
        int start = color[v] + 1;
        color[v] = 0;
        int chosen = 0;
        for (int val = start; val <= limit; ++val) {
            if (++tried > budget.max_candidates)
                throw BudgetError("brute_oriented_coloring: candidate budget exceeded");
            if (independent(v, val)) {
                chosen = val;
                break;
            }
        }
        if (chosen != 0) {
            color[v] = chosen;
            prefix_max[v + 1] = std::max(prefix_max[v], chosen);
            if (v + 1 == n) {
                OrientedColoring c{color, prefix_max[n]};
                if (verify_oriented_coloring(g, c)) return c;
            } else {
                ++v;
            }
        } else {
            if (v == 0) return std::nullopt;
            --v;
        }
    }
}

int brute_chromatic(const Digraph& g, const OracleBudget& budget, const CancelToken* cancel) {
    if (!is_oriented(g)) throw std::invalid_argument("brute_chromatic: digraph is not oriented");
    const Vertex n = g.vertex_count();
    if (n > budget.max_vertices) throw BudgetError("brute_chromatic: vertex budget exceeded");
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k)
        if (brute_oriented_coloring(g, k, budget, cancel)) return k;
    throw std::logic_error("brute_chromatic: no coloring found");  // unreachable
}

int brute_longest_path(const Digraph& g, const OracleBudget& budget, const CancelToken* cancel) {
    const Vertex n = g.vertex_count();
    if (auto topo = topological_order(g)) {
        std::vector<int> len(n, 0);
        int best = 0;
        for (Vertex v : *topo)
            for (Vertex w : g.out_neighbors(v)) {
                len[w] = std::max(len[w], len[v] + 1);
                best = std::max(best, len[w]);
            }
        return best;
    }
    if (n > budget.max_vertices) throw BudgetError("brute_longest_path: vertex budget exceeded");
    int best = 0;
    std::uint64_t steps = 0;
    std::vector<char> onpath(n, 0);
    std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
        if (++steps > budget.max_candidates)
            throw BudgetError("brute_longest_path: candidate budget exceeded");
        check_cancel(cancel);
        best = std::max(best, len);
        onpath[v] = 1;
        for (Vertex w : g.out_neighbors(v))
            if (!onpath[w]) dfs(w, len + 1);
        onpath[v] = 0;
    };
    for (Vertex v = 0; v < n; ++v) dfs(v, 0);
    return best;
}

bool brute_isomorphic(const Digraph& g1, const Digraph& g2, const OracleBudget& budget,
                      const CancelToken* cancel) {
    const Vertex n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.arc_count() != g2.arc_count()) return false;
    if (n > budget.max_vertices) throw BudgetError("brute_isomorphic: vertex budget exceeded");
    auto degree_pairs = [](const Digraph& g) {
        std::vector<std::pair<std::size_t, std::size_t>> d;
        d.reserve(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d.emplace_back(g.out_neighbors(v).size(), g.in_neighbors(v).size());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_pairs(g1) != degree_pairs(g2)) return false;

    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    std::uint64_t steps = 0;
    std::function<bool(Vertex)> assign = [&](Vertex v) -> bool {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (++steps > budget.max_candidates)
                throw BudgetError("brute_isomorphic: candidate budget exceeded");
            check_cancel(cancel);
            if (g1.out_neighbors(v).size() != g2.out_neighbors(w).size() ||
                g1.in_neighbors(v).size() != g2.in_neighbors(w).size())
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = g1.has_arc(u, v) == g2.has_arc(map[u], w) &&
                     g1.has_arc(v, u) == g2.has_arc(w, map[u]);
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (assign(v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return assign(0);
}

bool brute_path_hom_exists(const Digraph& g, long long k, const OracleBudget& budget) {
    const Vertex n = g.vertex_count();
    if (n > budget.max_vertices || n > 64)
        throw BudgetError("brute_path_hom_exists: vertex budget exceeded");
    if (k < 0) throw std::invalid_argument("brute_path_hom_exists: negative path length");
    if (n == 0) return false;
    if (k == 0) return true;
    // alive[t] = vertices at which some walk with exactly t arcs ends; a
    // repeated set means the orbit is periodic and never empties.
    std::uint64_t alive = n == 64 ? ~0ull : (1ull << n) - 1;
    std::unordered_set<std::uint64_t> seen;
    for (long long t = 1; t <= k; ++t) {
        std::uint64_t next = 0;
        for (const auto& [u, v] : g.arcs())
            if (alive >> u & 1) next |= 1ull << v;
        alive = next;
        if (alive == 0) return false;
        if (!seen.insert(alive).second) return true;
    }
    return true;
}

}  // namespace ocog
