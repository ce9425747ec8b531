#include "ocog/digraph.hpp"

#include <algorithm>

#include "doctest.h"
#include "ocog/check_suite.hpp"
#include "ocog/cotree.hpp"

using namespace ocog;

namespace {

Digraph t3() { return Digraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Independent P4-freeness route for the characterization property: a
// 4-subset inducing exactly three edges with degree multiset {1,1,2,2}.
bool p4_free(const UndirectedGraph& u) {
    const Vertex n = u.vertex_count();
    Vertex s[4];
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
                    std::sort(deg, deg + 4);
                    if (deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) return false;
                }
    return true;
}

}  // namespace

TEST_CASE("digraph construction normalizes and validates") {
    Digraph g(3, {{0, 1}, {0, 1}, {2, 1}});
    CHECK(g.arc_count() == 2);
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(2, 1));
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("is_oriented") {
    CHECK(is_oriented(Digraph(2, {{0, 1}})));
    CHECK_FALSE(is_oriented(Digraph(2, {{0, 1}, {1, 0}})));
    CHECK(is_oriented(t3()));
}

TEST_CASE("is_transitive") {
    CHECK(is_transitive(t3()));
    CHECK_FALSE(is_transitive(Digraph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_transitive(c3()));
}

TEST_CASE("underlying graph") {
    CHECK(underlying(Digraph(2, {{0, 1}, {1, 0}})) == UndirectedGraph(2, {{0, 1}}));
    CHECK(underlying(t3()) == UndirectedGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(underlying(Digraph(3, {})).edge_count() == 0);
}

TEST_CASE("induced subdigraph") {
    CHECK(induced_subdigraph(t3(), {0, 2}) == Digraph(2, {{0, 1}}));
    CHECK(induced_subdigraph(t3(), {0, 1, 2}) == t3());
    CHECK(induced_subdigraph(t3(), {}) == Digraph(0, {}));
    CHECK_THROWS_AS(induced_subdigraph(t3(), {7}), std::invalid_argument);
}

TEST_CASE("compositions") {
    Digraph u = disjoint_union({t3(), Digraph(1, {})});
    CHECK(u.vertex_count() == 4);
    CHECK(u.arc_count() == 3);
    Digraph o = order_composition({Digraph(2, {}), Digraph(1, {})});
    CHECK(o.arcs() == std::vector<Arc>{{0, 2}, {1, 2}});
}

TEST_CASE("forbidden pattern search basics") {
    CHECK_FALSE(find_forbidden_pattern(t3()).has_value());

    auto d1 = find_forbidden_pattern(Digraph(3, {{0, 1}, {1, 2}}));
    REQUIRE(d1.has_value());
    CHECK(d1->pattern == Pattern::D1);
    CHECK(d1->vertices == std::vector<Vertex>{0, 1, 2});

    auto d5 = find_forbidden_pattern(c3());
    REQUIRE(d5.has_value());
    CHECK(d5->pattern == Pattern::D5);
    CHECK(d5->vertices == std::vector<Vertex>{0, 1, 2});

    auto bi = find_forbidden_pattern(Digraph(2, {{0, 1}, {1, 0}}));
    REQUIRE(bi.has_value());
    CHECK(bi->pattern == Pattern::BiorientedP2);
    CHECK(bi->vertices == std::vector<Vertex>{0, 1});

    // a-b-c-d oriented a->b, c->b, c->d: no 3-vertex pattern, P4 underneath
    auto p4 = find_forbidden_pattern(Digraph(4, {{0, 1}, {2, 1}, {2, 3}}));
    REQUIRE(p4.has_value());
    CHECK(p4->pattern == Pattern::UndirectedP4);
    CHECK(p4->vertices == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("witnesses re-check") {
    for (int i = 0; i < 100; ++i) {
        Digraph g = [&] {
            std::vector<Arc> arcs;
            std::uint64_t r = 0x243F6A8885A308D3ull * (i + 1);
            int n = 3 + i % 4;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    r = r * 6364136223846793005ull + 1442695040888963407ull;
                    if (u != v && (r >> 33) % 3 == 0) arcs.emplace_back(u, v);
                }
            return Digraph(n, std::move(arcs));
        }();
        if (auto w = find_forbidden_pattern(g)) CHECK(witness_holds(g, *w));
    }
}

TEST_CASE("pattern absence equals oriented+transitive+P4-free, exhaustively to n=4") {
    for (int n = 0; n <= 4; ++n)
        for (const Digraph& g : all_loopfree_digraphs(n)) {
            const bool absent = !find_forbidden_pattern(g).has_value();
            const bool flags = is_oriented(g) && is_transitive(g) && p4_free(underlying(g));
            REQUIRE(absent == flags);
        }
}

TEST_CASE("pattern absence sampled at n=5,6") {
    for (int i = 0; i < 150; ++i) {
        int n = 5 + i % 2;
        Digraph g = permute_vertices(random_oriented_digraph(n, 77 + i), 991 + i);
        const bool absent = !find_forbidden_pattern(g).has_value();
        const bool flags = is_oriented(g) && is_transitive(g) && p4_free(underlying(g));
        REQUIRE(absent == flags);
    }
}

TEST_CASE("accepted digraphs are acyclic") {
    for (int i = 0; i < 50; ++i) {
        Digraph g = evaluate(random_canonical(1 + i % 10, 1234 + i));
        CHECK(is_oriented(g));
        CHECK(is_transitive(g));
        CHECK(is_acyclic(g));
    }
    CHECK_FALSE(is_acyclic(c3()));
}

TEST_CASE("underlying commutes with induced subdigraph") {
    Digraph g(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {0, 4}});
    std::vector<Vertex> s{0, 1, 3, 4};
    UndirectedGraph a = underlying(induced_subdigraph(g, s));
    // expected: edges of un(g) within {0,1,3,4}, re-indexed
    UndirectedGraph b(4, {{0, 1}, {2, 3}, {0, 3}});
    CHECK(a == b);
}

TEST_CASE("topological order") {
    auto topo = topological_order(t3());
    REQUIRE(topo.has_value());
    CHECK(*topo == std::vector<Vertex>{0, 1, 2});
    CHECK_FALSE(topological_order(c3()).has_value());
}
