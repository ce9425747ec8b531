#include "ocog/check_suite.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "ocog/algorithms.hpp"
#include "ocog/recognition.hpp"

namespace ocog {

Digraph random_oriented_digraph(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_oriented_digraph: negative n");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            switch (rng() % 3) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                default: break;
            }
        }
    return Digraph(n, std::move(arcs));
}

std::vector<Digraph> all_loopfree_digraphs(int n) {
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) pairs.emplace_back(u, v);
    if (pairs.size() > 20) throw std::invalid_argument("all_loopfree_digraphs: n too large");
    std::vector<Digraph> out;
    out.reserve(1u << pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) arcs.push_back(pairs[i]);
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

std::vector<Digraph> all_oriented_digraphs(int n) {
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (pairs.size() > 12) throw std::invalid_argument("all_oriented_digraphs: n too large");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<Digraph> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Arc> arcs;
        std::uint64_t c = code;
        for (const auto& [u, v] : pairs) {
            switch (c % 3) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                default: break;
            }
            c /= 3;
        }
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

namespace {

// Rebuilds t bottom-up, applying kid reorderings / leaf relabelings.
CanonicalCoExpr rebuild(const CoExpr& t,
                        const std::function<Vertex(Vertex)>& leaf_map,
                        const std::function<void(std::vector<NodeId>&)>& reorder_union) {
    CoExpr::Builder b;
    std::vector<NodeId> new_id(t.node_count(), 0);
    for (NodeId u : postorder(t)) {
        const auto& nd = t.node(u);
        if (nd.kind == NodeKind::Leaf) {
            new_id[u] = b.add_leaf(leaf_map(nd.vertex));
            continue;
        }
        std::vector<NodeId> children;
        children.reserve(nd.children.size());
        for (NodeId c : nd.children) children.push_back(new_id[c]);
        if (nd.kind == NodeKind::Union) reorder_union(children);
        new_id[u] = b.add_node(nd.kind, children);
    }
    return CanonicalCoExpr::checked(b.finish(new_id[t.root()]));
}

}  // namespace

CanonicalCoExpr shuffle_union_children(const CanonicalCoExpr& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return rebuild(
        t.expr(), [](Vertex v) { return v; },
        [&rng](std::vector<NodeId>& kids) {
            for (std::size_t i = kids.size(); i > 1; --i)
                std::swap(kids[i - 1], kids[rng() % i]);
        });
}

CanonicalCoExpr permute_leaf_ids(const CanonicalCoExpr& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(t.expr().leaf_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    return rebuild(
        t.expr(), [&perm](Vertex v) { return perm[v]; }, [](std::vector<NodeId>&) {});
}

Digraph permute_vertices(const Digraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Digraph(g.vertex_count(), std::move(arcs));
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Prop {
    PropertyResult result;

    void expect(bool cond, const std::string& what) {
        ++result.cases;
        if (!cond && result.pass) {
            result.pass = false;
            result.detail = what;
        }
    }
};

// Independent P4 route: some 4-subset induces a path.
bool has_induced_p4(const UndirectedGraph& u) {
    const Vertex n = u.vertex_count();
    std::vector<Vertex> s(4);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (u.has_edge(s[i], s[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    int ones = 0, twos = 0;
                    for (int d : deg) {
                        if (d == 1) ++ones;
                        if (d == 2) ++twos;
                    }
                    if (ones == 2 && twos == 2) return true;  // path, not star/triangle
                }
    return false;
}

UndirectedGraph induced_undirected(const UndirectedGraph& u, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Vertex> rank(u.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) rank[s[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const auto& [a, b] : u.edges())
        if (rank[a] >= 0 && rank[b] >= 0) edges.emplace_back(rank[a], rank[b]);
    return UndirectedGraph(static_cast<Vertex>(s.size()), std::move(edges));
}

// Random expression tree that may nest same-kind nodes (for canonicalize
// tests); leaf ids 0..n-1 in left-to-right order.
CoExpr random_expr(int n, std::mt19937_64& rng) {
    Vertex next = 0;
    std::function<CoExpr(int)> gen = [&](int size) -> CoExpr {
        if (size == 1) return CoExpr::leaf(next++);
        int arity = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                             std::min(size, 4) - 1));
        std::vector<int> cuts;
        while (static_cast<int>(cuts.size()) < arity - 1) {
            int c = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size - 1));
            if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(size);
        std::vector<CoExpr> children;
        int prev = 0;
        for (int c : cuts) {
            children.push_back(gen(c - prev));
            prev = c;
        }
        return CoExpr::make((rng() & 1) ? NodeKind::Union : NodeKind::Order,
                            std::move(children));
    };
    return gen(n);
}

std::vector<Vertex> random_subset(int n, std::mt19937_64& rng) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

}  // namespace

CheckReport run_check(const CheckParams& params) {
    CheckReport report;
    const int n_max = std::max(1, params.n_max);
    const int oracle_n = std::min(n_max, params.budget.max_vertices);
    auto run = [&](const std::string& name, const std::function<void(Prop&)>& body) {
        Prop prop;
        prop.result.name = name;
        try {
            body(prop);
        } catch (const std::exception& e) {
            prop.result.pass = false;
            prop.result.detail = std::string("exception: ") + e.what();
        }
        report.all_pass = report.all_pass && prop.result.pass;
        report.results.push_back(std::move(prop.result));
    };
    auto tree_at = [&](int leaves, std::uint64_t salt) {
        return random_canonical(leaves, mix(params.seed, salt));
    };

    run("pattern-characterization", [&](Prop& p) {
        auto check = [&](const Digraph& g) {
            const bool absent = !find_forbidden_pattern(g).has_value();
            const bool flags =
                is_oriented(g) && is_transitive(g) && !has_induced_p4(underlying(g));
            p.expect(absent == flags, "pattern scan disagrees with predicate route");
        };
        for (int n = 0; n <= std::min(4, n_max); ++n)
            for (const Digraph& g : all_loopfree_digraphs(n)) check(g);
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 1000 + i));
            int n = 5 + static_cast<int>(rng() % 2);
            std::vector<Arc> arcs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u != v && rng() % 3 == 0) arcs.emplace_back(u, v);
            check(Digraph(n, std::move(arcs)));
        }
    });

    run("witness-recheck", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 2000 + i));
            int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
            std::vector<Arc> arcs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u != v && rng() % 3 == 0) arcs.emplace_back(u, v);
            Digraph g(n, std::move(arcs));
            if (auto w = find_forbidden_pattern(g))
                p.expect(witness_holds(g, *w), "witness does not re-check");
        }
    });

    run("accepted-implies-transitive-oriented-acyclic", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 3000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             3000 + i);
            Digraph g = evaluate(t);
            p.expect(is_oriented(g) && is_transitive(g) && is_acyclic(g),
                     "evaluated tree not transitive/oriented/acyclic");
        }
    });

    run("induced-underlying-commute", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 4000 + i));
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
            std::vector<Arc> arcs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u != v && rng() % 3 == 0) arcs.emplace_back(u, v);
            Digraph g(n, std::move(arcs));
            auto s = random_subset(n, rng);
            p.expect(underlying(induced_subdigraph(g, s)) ==
                         induced_undirected(underlying(g), s),
                     "underlying/induced do not commute");
        }
    });

    run("evaluate-is-cograph", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 5000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             5000 + i);
            p.expect(!find_forbidden_pattern(evaluate(t)).has_value(),
                     "evaluated tree contains a forbidden pattern");
        }
    });

    run("canonicalize-preserves-evaluate", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 6000 + i));
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
            CoExpr t = random_expr(n, rng);
            auto canon = canonicalize(t);
            p.expect(is_canonical(canon.expr()), "canonical form violates alternation");
            p.expect(evaluate(canon.expr()) == evaluate(t), "canonicalize changed the digraph");
            p.expect(structurally_equal(canonicalize(canon.expr()).expr(), canon.expr()),
                     "canonicalize not idempotent");
        }
    });

    run("parse-serialize-roundtrip", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 7000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             7000 + i);
            auto parsed = parse(serialize(t.expr()));
            p.expect(structurally_equal(parsed.expr, t.expr()),
                     "parse(serialize(t)) differs from t");
        }
    });

    run("recognition-agreement", [&](Prop& p) {
        auto check = [&](const Digraph& g) {
            if (g.vertex_count() == 0) return;
            auto outcome = recognize(g);
            p.expect(outcome.accepted() == is_oriented_cograph(g),
                     "recognize disagrees with pattern-free route");
            if (outcome.accepted())
                p.expect(evaluate(outcome.tree()) == g, "tree does not evaluate to the input");
            else
                p.expect(witness_holds(g, outcome.witness()), "witness does not re-check");
        };
        for (int n = 1; n <= std::min(4, n_max); ++n)
            for (const Digraph& g : all_loopfree_digraphs(n)) check(g);
        for (int i = 0; i < params.trials; ++i) check(random_oriented_digraph(5, mix(params.seed, 8000 + i)));
    });

    run("recognition-roundtrip", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 9000 + i));
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(2 * n_max, 8)));
            auto t = tree_at(n, 9000 + i);
            Digraph g = evaluate(t);
            auto outcome = recognize(g);
            p.expect(outcome.accepted() && evaluate(outcome.tree()) == g,
                     "round trip failed on a constructed co-graph");
        }
    });

    run("chromatic-oracle-agreement", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 10000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(oracle_n)),
                             10000 + i);
            int fast = chromatic_number(t);
            int oracle = brute_chromatic(evaluate(t), params.budget);
            if (params.inject_fault) oracle += 1;  // harness self-test
            p.expect(fast == oracle, "chromatic_number disagrees with brute_chromatic");
        }
    });

    run("chi-path-un-chain", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 11000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             11000 + i);
            int chi = chromatic_number(t);
            auto [un_chi, un_omega] = undirected_chromatic_and_clique(t);
            p.expect(chi == longest_path_length(t) + 1 && chi == un_chi && chi == un_omega,
                     "chi_o = l+1 = chi(un) = omega(un) chain broken");
        }
    });

    run("label-coloring-valid", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 12000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             12000 + i);
            auto res = label_coloring(t);
            p.expect(res.coloring.k == chromatic_number(t),
                     "labeling color count differs from recursion");
            p.expect(verify_oriented_coloring(evaluate(t), res.coloring),
                     "labeling produced an invalid oriented coloring");
            const CoExpr& e = t.expr();
            for (NodeId u = 0; u < e.node_count(); ++u) {
                p.expect(res.state.in[u] <= res.state.out[u], "in[u] > out[u]");
                if (e.node(u).kind == NodeKind::Leaf)
                    p.expect(res.state.in[u] == res.state.out[u] &&
                                 res.state.out[u] == res.state.color[u],
                             "leaf state in/out/color mismatch");
            }
        }
    });

    run("subdigraph-monotone", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 13000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(oracle_n)),
                             13000 + i);
            Digraph g = evaluate(t);
            auto s = random_subset(g.vertex_count(), rng);
            p.expect(brute_chromatic(induced_subdigraph(g, s), params.budget) <=
                         chromatic_number(t),
                     "subdigraph needs more colors than the whole graph");
        }
    });

    run("order-composition-rule", [&](Prop& p) {
        const int part = std::min(4, params.budget.max_vertices / 2);
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 14000 + i));
            Digraph g1 = random_oriented_digraph(
                1 + static_cast<int>(rng() % static_cast<std::uint64_t>(part)),
                mix(params.seed, 14500 + i));
            Digraph g2 = random_oriented_digraph(
                1 + static_cast<int>(rng() % static_cast<std::uint64_t>(part)),
                mix(params.seed, 14700 + i));
            p.expect(brute_chromatic(order_composition({g1, g2}), params.budget) ==
                         brute_chromatic(g1, params.budget) + brute_chromatic(g2, params.budget),
                     "order rule chi_o(g1 > g2) = chi_o(g1) + chi_o(g2) broken");
        }
    });

    run("union-lower-bound", [&](Prop& p) {
        const int part = std::min(4, params.budget.max_vertices / 2);
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 15000 + i));
            Digraph g1 = random_oriented_digraph(
                1 + static_cast<int>(rng() % static_cast<std::uint64_t>(part)),
                mix(params.seed, 15500 + i));
            Digraph g2 = random_oriented_digraph(
                1 + static_cast<int>(rng() % static_cast<std::uint64_t>(part)),
                mix(params.seed, 15700 + i));
            p.expect(brute_chromatic(disjoint_union({g1, g2}), params.budget) >=
                         std::max(brute_chromatic(g1, params.budget),
                                  brute_chromatic(g2, params.budget)),
                     "union lower bound broken");
        }
        // Strictness witness: the triangle and the transitive tournament both
        // need 3 colors, their union needs 4. Needs 6 oracle vertices.
        if (params.budget.max_vertices >= 6) {
            Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
            Digraph t3(3, {{0, 1}, {0, 2}, {1, 2}});
            p.expect(brute_chromatic(disjoint_union({c3, t3}), params.budget) == 4,
                     "strict union example does not need 4 colors");
        }
    });

    run("hom-duality", [&](Prop& p) {
        for (int n = 1; n <= std::min(4, oracle_n); ++n)
            for (const Digraph& g : all_oriented_digraphs(n))
                for (int k = 1; k <= n; ++k)
                    p.expect(hom_to_transitive_tournament(g, k).has_value() ==
                                 !brute_path_hom_exists(g, k, params.budget),
                             "path duality broken");
    });

    run("hom-at-chi", [&](Prop& p) {
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 16000 + i));
            auto t = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max)),
                             16000 + i);
            Digraph g = evaluate(t);
            int chi = chromatic_number(t);
            auto h = hom_to_transitive_tournament(g, chi);
            p.expect(h.has_value(), "no homomorphism at k = chi_o");
            if (h)
                for (const auto& [u, v] : g.arcs())
                    p.expect((*h)[u] < (*h)[v], "mapping is not a homomorphism");
            p.expect(!hom_to_transitive_tournament(g, chi - 1).has_value(),
                     "homomorphism exists at k = chi_o - 1");
        }
    });

    run("iso-agreement", [&](Prop& p) {
        const int cap = std::min(7, oracle_n);
        for (int i = 0; i < params.trials; ++i) {
            std::mt19937_64 rng(mix(params.seed, 17000 + i));
            auto t1 = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap)),
                              17000 + i);
            auto t2 = tree_at(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap)),
                              17500 + i);
            p.expect(cotree_isomorphic(t1, t2) ==
                         brute_isomorphic(evaluate(t1), evaluate(t2), params.budget),
                     "cotree_isomorphic disagrees with brute_isomorphic");
            auto mutated = shuffle_union_children(
                permute_leaf_ids(t1, mix(params.seed, 17600 + i)), mix(params.seed, 17700 + i));
            p.expect(cotree_isomorphic(t1, mutated),
                     "shuffled/renamed copy not recognized as isomorphic");
        }
    });

    run("brute-iso-equivalence", [&](Prop& p) {
        const int cap = std::min(6, oracle_n);
        for (int i = 0; i < params.trials / 2; ++i) {
            std::mt19937_64 rng(mix(params.seed, 18000 + i));
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
            Digraph a = random_oriented_digraph(n, mix(params.seed, 18100 + i));
            Digraph b = random_oriented_digraph(n, mix(params.seed, 18200 + i));
            Digraph c = permute_vertices(a, mix(params.seed, 18300 + i));
            p.expect(brute_isomorphic(a, a, params.budget), "not reflexive");
            p.expect(brute_isomorphic(a, c, params.budget), "relabeled copy not isomorphic");
            p.expect(brute_isomorphic(a, b, params.budget) ==
                         brute_isomorphic(b, a, params.budget),
                     "not symmetric");
            // a ~ c, so transitivity forces b to compare equally to both.
            p.expect(brute_isomorphic(a, b, params.budget) ==
                         brute_isomorphic(c, b, params.budget),
                     "transitivity spot check failed");
        }
    });

    return report;
}

}  // namespace ocog
