#include "ocog/algorithms.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ocog {

bool verify_oriented_coloring(const Digraph& g, const OrientedColoring& c) {
    const Vertex n = g.vertex_count();
    if (static_cast<Vertex>(c.color.size()) != n)
        throw std::invalid_argument(
            "verify_oriented_coloring: coloring does not cover every vertex");
    for (Vertex v = 0; v < n; ++v)
        if (c.color[v] < 1 || c.color[v] > c.k)
            throw std::invalid_argument("verify_oriented_coloring: color outside 1..k");
    std::vector<std::pair<int, int>> class_arcs;
    class_arcs.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) {
        if (c.color[u] == c.color[v]) return false;
        class_arcs.emplace_back(c.color[u], c.color[v]);
    }
    std::sort(class_arcs.begin(), class_arcs.end());
    class_arcs.erase(std::unique(class_arcs.begin(), class_arcs.end()), class_arcs.end());
    for (const auto& [a, b] : class_arcs)
        if (std::binary_search(class_arcs.begin(), class_arcs.end(), std::pair{b, a}))
            return false;
    return true;
}

LabelResult label_coloring(const CanonicalCoExpr& tc) {
    const CoExpr& t = tc.expr();
    const std::size_t count = t.node_count();
    LabelState state{std::vector<int>(count, 0), std::vector<int>(count, 0),
                     std::vector<int>(count, -1)};
    std::vector<int> colors(t.leaf_count(), 0);

    struct Frame {
        NodeId node;
        std::size_t child;
        int i;
    };
    std::vector<Frame> stack;
    auto push = [&](NodeId u, int i) {
        if (t.node(u).kind != NodeKind::Leaf) {
            state.in[u] = i;
            state.out[u] = 0;
        }
        stack.push_back({u, 0, i});
    };
    // Child finished with value j = out[child]: raise out, then restart the
    // color counter at in[u] under a union node, at j+1 under an order node.
    auto absorb = [&](int j) {
        Frame& p = stack.back();
        if (state.out[p.node] < j) state.out[p.node] = j;
        ++p.child;
        p.i = t.node(p.node).kind == NodeKind::Union ? state.in[p.node] : j + 1;
    };

    push(t.root(), 1);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nd = t.node(f.node);
        if (nd.kind == NodeKind::Leaf) {
            if (nd.vertex >= t.leaf_count())
                throw std::invalid_argument("label_coloring: leaf ids must be 0..n-1");
            state.in[f.node] = state.out[f.node] = state.color[f.node] = f.i;
            colors[nd.vertex] = f.i;
            const int j = f.i;
            stack.pop_back();
            if (!stack.empty()) absorb(j);
            continue;
        }
        if (f.child < nd.children.size()) {
            NodeId c = nd.children[f.child];
            const int i = f.i;
            push(c, i);
        } else {
            const int j = state.out[f.node];
            stack.pop_back();
            if (!stack.empty()) absorb(j);
        }
    }
    return LabelResult{OrientedColoring{std::move(colors), state.out[t.root()]},
                       std::move(state)};
}

namespace {

template <typename LeafFn, typename UnionFn, typename OrderFn>
std::vector<int> tree_dp(const CoExpr& t, LeafFn leaf, UnionFn unite, OrderFn order) {
    std::vector<int> val(t.node_count(), 0);
    for (NodeId u : postorder(t)) {
        const auto& nd = t.node(u);
        if (nd.kind == NodeKind::Leaf) {
            val[u] = leaf();
        } else if (nd.kind == NodeKind::Union) {
            int m = 0;
            for (NodeId c : nd.children) m = std::max(m, val[c]);
            val[u] = unite(m);
        } else {
            int s = 0;
            for (NodeId c : nd.children) s += val[c];
            val[u] = order(s, static_cast<int>(nd.children.size()));
        }
    }
    return val;
}

}  // namespace

int chromatic_number(const CanonicalCoExpr& tc) {
    const CoExpr& t = tc.expr();
    auto val = tree_dp(
        t, [] { return 1; }, [](int m) { return m; }, [](int s, int) { return s; });
    return val[t.root()];
}

int longest_path_length(const CanonicalCoExpr& tc) {
    const CoExpr& t = tc.expr();
    auto val = tree_dp(
        t, [] { return 0; }, [](int m) { return m; },
        [](int s, int arity) { return s + arity - 1; });
    return val[t.root()];
}

ChiOmega undirected_chromatic_and_clique(const CanonicalCoExpr& tc) {
    const CoExpr& t = tc.expr();
    auto chi = tree_dp(
        t, [] { return 1; }, [](int m) { return m; }, [](int s, int) { return s; });
    auto omega = tree_dp(
        t, [] { return 1; }, [](int m) { return m; }, [](int s, int) { return s; });
    return ChiOmega{chi[t.root()], omega[t.root()]};
}

std::optional<std::vector<int>> hom_to_transitive_tournament(const Digraph& g, int k) {
    if (!is_oriented(g))
        throw std::invalid_argument("hom_to_transitive_tournament: digraph is not oriented");
    const Vertex n = g.vertex_count();
    if (n == 0) return std::vector<int>{};
    if (auto topo = topological_order(g)) {
        std::vector<int> level(n, 1);
        for (Vertex v : *topo)
            for (Vertex w : g.out_neighbors(v)) level[w] = std::max(level[w], level[v] + 1);
        if (*std::max_element(level.begin(), level.end()) <= k) return level;
        return std::nullopt;
    }
    // Cyclic input: exhaustive backtracking over all assignments V -> 1..k.
    if (k < 1) return std::nullopt;
    std::vector<int> h(n, 0);
    auto feasible = [&](Vertex v, int val) {
        for (Vertex u : g.in_neighbors(v))
            if (h[u] != 0 && h[u] >= val) return false;
        for (Vertex w : g.out_neighbors(v))
            if (h[w] != 0 && h[w] <= val) return false;
        return true;
    };
    Vertex v = 0;
    while (true) {
        const int start = h[v] + 1;
        h[v] = 0;
        int chosen = 0;
        for (int val = start; val <= k; ++val)
            if (feasible(v, val)) {
                chosen = val;
                break;
            }
        if (chosen != 0) {
            h[v] = chosen;
            if (++v == n) return h;
        } else {
            if (v == 0) return std::nullopt;
            --v;
        }
    }
}

bool is_oriented_clique(const CanonicalCoExpr& t) {
    const bool by_chi = chromatic_number(t) == t.expr().leaf_count();
    bool by_tree = true;
    for (NodeId id = 0; id < t.expr().node_count(); ++id)
        if (t.expr().node(id).kind == NodeKind::Union) {
            by_tree = false;
            break;
        }
    const Digraph g = evaluate(t);
    const bool by_graph = is_tournament(g) && is_transitive(g);
    if (by_chi != by_tree || by_tree != by_graph)
        throw std::logic_error("is_oriented_clique: characterizations disagree");
    return by_chi;
}

namespace {

// Per-level (kind, arity) sequences in breadth-first order: the children of
// the level-l nodes, visited parent by parent, are exactly the level-(l+1)
// sequence in order, so every later pass streams over compact arrays and
// never touches the arena again.
struct LevelMeta {
    std::vector<std::uint8_t> kind;
    std::vector<std::uint32_t> arity;
};

std::vector<LevelMeta> bfs_levels(const CoExpr& t) {
    std::vector<LevelMeta> levels;
    std::vector<NodeId> cur{t.root()}, next;
    while (!cur.empty()) {
        LevelMeta meta;
        meta.kind.reserve(cur.size());
        meta.arity.reserve(cur.size());
        next.clear();
        for (NodeId id : cur) {
            const auto& nd = t.node(id);
            meta.kind.push_back(static_cast<std::uint8_t>(nd.kind));
            meta.arity.push_back(static_cast<std::uint32_t>(nd.children.size()));
            for (NodeId c : nd.children) next.push_back(c);
        }
        levels.push_back(std::move(meta));
        cur = std::move(next);
        next.clear();
    }
    return levels;
}

// A node's per-level signature: its kind plus its children's integer labels,
// stored as a span of a flat buffer (sorted for union nodes, in child order
// for order nodes; leaves have an empty span). id is the node's position
// within its level.
struct SigEntry {
    std::int32_t kind;
    std::uint32_t off, len;
    std::uint32_t id;
};

void build_signatures(const LevelMeta& level, const std::vector<std::int32_t>& labels_below,
                      std::vector<std::int32_t>& buf, std::vector<SigEntry>& entries) {
    buf.clear();
    entries.clear();
    entries.reserve(level.kind.size());
    std::size_t child_pos = 0;
    for (std::uint32_t i = 0; i < level.kind.size(); ++i) {
        const auto off = static_cast<std::uint32_t>(buf.size());
        const std::uint32_t arity = level.arity[i];
        buf.insert(buf.end(), labels_below.begin() + child_pos,
                   labels_below.begin() + child_pos + arity);
        child_pos += arity;
        if (level.kind[i] == static_cast<std::uint8_t>(NodeKind::Union))
            std::sort(buf.begin() + off, buf.end());
        entries.push_back({static_cast<std::int32_t>(level.kind[i]), off, arity, i});
    }
}

int compare_signatures(const std::vector<std::int32_t>& xbuf, const SigEntry& x,
                       const std::vector<std::int32_t>& ybuf, const SigEntry& y) {
    if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
    const std::uint32_t common = std::min(x.len, y.len);
    for (std::uint32_t i = 0; i < common; ++i) {
        if (xbuf[x.off + i] != ybuf[y.off + i]) return xbuf[x.off + i] < ybuf[y.off + i] ? -1 : 1;
    }
    if (x.len != y.len) return x.len < y.len ? -1 : 1;
    return 0;
}

// Lexicographic sort of the level's signatures (kind primary, then the label
// sequence, shorter sequences first on a tie) by least-significant-position
// counting passes, linear in total sequence length plus the label range.
void sort_level(std::vector<SigEntry>& entries, const std::vector<std::int32_t>& buf,
                std::int32_t range) {
    const std::size_t m = entries.size();
    if (m <= 1) return;
    std::uint32_t maxlen = 0;
    std::size_t pairs = 0;
    for (const auto& e : entries) {
        maxlen = std::max(maxlen, e.len);
        pairs += e.len;
    }

    std::vector<std::vector<std::uint32_t>> by_len(maxlen + 1);
    for (std::uint32_t i = 0; i < m; ++i) by_len[entries[i].len].push_back(i);

    std::vector<std::uint32_t> order;
    if (maxlen > 0) {
        // ascending distinct label values per position, via one counting
        // sort of all (position, value) pairs by value
        std::vector<std::int32_t> cnt(range + 1, 0);
        for (const auto& e : entries)
            for (std::uint32_t p = 0; p < e.len; ++p) ++cnt[buf[e.off + p]];
        std::vector<std::int32_t> start(range + 1, 0);
        for (std::int32_t v = 1, run = 0; v <= range; ++v) {
            start[v - 1] = run;
            run += cnt[v - 1];
        }
        std::vector<std::uint32_t> pair_pos(pairs);
        std::vector<std::int32_t> pair_val(pairs);
        for (const auto& e : entries)
            for (std::uint32_t p = 0; p < e.len; ++p) {
                const std::int32_t v = buf[e.off + p];
                pair_pos[start[v]] = p;
                pair_val[start[v]++] = v;
            }
        std::vector<std::vector<std::int32_t>> used(maxlen);
        for (std::size_t s = 0; s < pairs; ++s) {
            auto& list = used[pair_pos[s]];
            if (list.empty() || list.back() != pair_val[s]) list.push_back(pair_val[s]);
        }
        std::fill(cnt.begin(), cnt.end(), 0);

        order = by_len[maxlen];
        std::vector<std::uint32_t> longer;
        for (std::int32_t pos = static_cast<std::int32_t>(maxlen) - 1; pos >= 0; --pos) {
            // 'order' holds exactly the entries with len > pos, sorted by
            // their suffix from pos+1; entries of length pos precede them.
            for (std::uint32_t idx : order) ++cnt[buf[entries[idx].off + pos]];
            std::int32_t run = 0;
            for (std::int32_t v : used[pos]) {
                const std::int32_t c = cnt[v];
                cnt[v] = run;
                run += c;
            }
            longer.resize(order.size());
            for (std::uint32_t idx : order) longer[cnt[buf[entries[idx].off + pos]]++] = idx;
            for (std::int32_t v : used[pos]) cnt[v] = 0;
            order.assign(by_len[pos].begin(), by_len[pos].end());
            order.insert(order.end(), longer.begin(), longer.end());
        }
    } else {
        order = by_len[0];
    }

    // stable pass on the primary key
    std::vector<std::uint32_t> by_kind[3];
    for (std::uint32_t idx : order) by_kind[entries[idx].kind].push_back(idx);
    std::vector<SigEntry> sorted;
    sorted.reserve(m);
    for (const auto& bucket : by_kind)
        for (std::uint32_t idx : bucket) sorted.push_back(entries[idx]);
    entries = std::move(sorted);
}

}  // namespace

bool cotree_isomorphic(const CanonicalCoExpr& tc1, const CanonicalCoExpr& tc2) {
    const CoExpr& a = tc1.expr();
    const CoExpr& b = tc2.expr();
    if (a.leaf_count() != b.leaf_count()) return false;
    const auto lv_a = bfs_levels(a);
    const auto lv_b = bfs_levels(b);
    if (lv_a.size() != lv_b.size()) return false;  // heights differ
    if (lv_a[0].kind[0] != lv_b[0].kind[0]) return false;  // root kinds differ

    std::vector<std::int32_t> below_a, below_b, cur_a, cur_b;
    std::vector<std::int32_t> buf_a, buf_b;
    std::vector<SigEntry> ent_a, ent_b;

    std::int32_t rank_range = 1;  // labels on the level below are < rank_range
    for (std::size_t lvl = lv_a.size(); lvl-- > 0;) {
        build_signatures(lv_a[lvl], below_a, buf_a, ent_a);
        build_signatures(lv_b[lvl], below_b, buf_b, ent_b);
        if (ent_a.size() != ent_b.size()) return false;
        sort_level(ent_a, buf_a, rank_range);
        sort_level(ent_b, buf_b, rank_range);
        // The sorted sequences must match; distinct signatures get integer
        // ranks through one shared bijection applied to both trees.
        cur_a.resize(ent_a.size());
        cur_b.resize(ent_b.size());
        std::int32_t rank = 0;
        for (std::size_t i = 0; i < ent_a.size(); ++i) {
            if (compare_signatures(buf_a, ent_a[i], buf_b, ent_b[i]) != 0) return false;
            if (i == 0 || compare_signatures(buf_a, ent_a[i], buf_a, ent_a[i - 1]) != 0) ++rank;
            cur_a[ent_a[i].id] = rank;
            cur_b[ent_b[i].id] = rank;
        }
        rank_range = rank + 1;
        below_a.swap(cur_a);
        below_b.swap(cur_b);
    }
    return true;
}

}  // namespace ocog
