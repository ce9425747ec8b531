#include "ocog/algorithms.hpp"

#include <algorithm>

#include "doctest.h"
#include "ocog/check_suite.hpp"
#include "ocog/oracle.hpp"

using namespace ocog;

namespace {

CanonicalCoExpr tree(const char* s) { return canonicalize(parse(s).expr); }

// Test-only oracles for the underlying undirected graph, independent of the
// co-tree recursions: chromatic number by first-occurrence-canonical class
// assignments, clique number by subset enumeration.
int undirected_chromatic_oracle(const UndirectedGraph& g) {
    const Vertex n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> color(n, 0);
    auto fits = [&](Vertex v, int c) {
        for (Vertex w : g.neighbors(v))
            if (w < v && color[w] == c) return false;
        return true;
    };
    for (int k = 1; k <= n; ++k) {
        std::vector<int> maxc(n + 1, 0);
        Vertex v = 0;
        bool found = false;
        std::fill(color.begin(), color.end(), 0);
        while (true) {
            const int limit = std::min(maxc[v] + 1, k);
            int val = color[v] + 1;
            color[v] = 0;
            int chosen = 0;
            for (; val <= limit; ++val)
                if (fits(v, val)) {
                    chosen = val;
                    break;
                }
            if (chosen != 0) {
                color[v] = chosen;
                maxc[v + 1] = std::max(maxc[v], chosen);
                if (v + 1 == n) {
                    found = true;
                    break;
                }
                ++v;
            } else {
                if (v == 0) break;
                --v;
            }
        }
        if (found) return k;
    }
    return n;
}

int undirected_clique_oracle(const UndirectedGraph& g) {
    const Vertex n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j)
                clique = g.has_edge(s[i], s[j]);
        if (clique) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("verify_oriented_coloring definition") {
    Digraph p2(2, {{0, 1}});
    CHECK(verify_oriented_coloring(p2, {{1, 2}, 2}));
    Digraph p3(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(verify_oriented_coloring(p3, {{1, 2, 1}, 2}));  // arc into and out of class 1
    CHECK(verify_oriented_coloring(p3, {{1, 2, 3}, 3}));
    Digraph arcless(3, {});
    CHECK(verify_oriented_coloring(arcless, {{1, 2, 3}, 3}));
    CHECK_FALSE(verify_oriented_coloring(p2, {{1, 1}, 1}));  // adjacent same class
    CHECK_THROWS_AS(verify_oriented_coloring(p3, OrientedColoring{{1, 2}, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_oriented_coloring(p2, OrientedColoring{{1, 5}, 2}),
                    std::invalid_argument);
}

TEST_CASE("label_coloring on small trees") {
    auto t3 = label_coloring(tree("a > b > c"));
    CHECK(t3.coloring.color == std::vector<int>{1, 2, 3});
    CHECK(t3.coloring.k == 3);

    auto pair = label_coloring(tree("a + b"));
    CHECK(pair.coloring.color == std::vector<int>{1, 1});
    CHECK(pair.coloring.k == 1);

    auto mixed = label_coloring(tree("(a > b) + (c > d > e)"));
    CHECK(mixed.coloring.k == 3);
    CHECK(brute_chromatic(evaluate(tree("(a > b) + (c > d > e)"))) == 3);
}

TEST_CASE("label state invariants") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = random_canonical(1 + seed % 10, 31 + seed);
        auto res = label_coloring(t);
        const CoExpr& e = t.expr();
        CHECK(res.coloring.k == chromatic_number(t));
        CHECK(verify_oriented_coloring(evaluate(t), res.coloring));
        // colors form the contiguous range 1..k
        std::vector<char> used(res.coloring.k + 1, 0);
        for (int c : res.coloring.color) {
            REQUIRE(c >= 1);
            REQUIRE(c <= res.coloring.k);
            used[c] = 1;
        }
        for (int c = 1; c <= res.coloring.k; ++c) CHECK(used[c] == 1);
        for (NodeId u = 0; u < e.node_count(); ++u) {
            CHECK(res.state.in[u] <= res.state.out[u]);
            if (e.node(u).kind == NodeKind::Leaf) {
                CHECK(res.state.in[u] == res.state.out[u]);
                CHECK(res.state.out[u] == res.state.color[u]);
            } else {
                CHECK(res.state.color[u] == -1);
            }
        }
    }
}

TEST_CASE("chromatic_number recursion") {
    CHECK(chromatic_number(tree("a > b")) == 2);
    CHECK(chromatic_number(tree("a")) == 1);
    auto t = tree("(a + b) > (c + d)");
    CHECK(chromatic_number(t) == 2);
    CHECK(brute_chromatic(evaluate(t)) == 2);
}

TEST_CASE("longest oriented path recursion") {
    CHECK(longest_path_length(tree("a")) == 0);
    CHECK(longest_path_length(tree("a > b > c")) == 2);
    CHECK(brute_longest_path(evaluate(tree("a > b > c"))) == 2);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = random_canonical(1 + seed % 8, 77 + seed);
        CHECK(longest_path_length(t) == chromatic_number(t) - 1);
        CHECK(longest_path_length(t) == brute_longest_path(evaluate(t)));
    }
}

TEST_CASE("undirected chromatic and clique equal chi_o") {
    auto t3 = undirected_chromatic_and_clique(tree("a > b > c"));
    CHECK(t3.chromatic == 3);
    CHECK(t3.clique == 3);
    auto pair = undirected_chromatic_and_clique(tree("a + b"));
    CHECK(pair.chromatic == 1);
    CHECK(pair.clique == 1);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_canonical(1 + seed % 10, 123 + seed);
        auto [chi, omega] = undirected_chromatic_and_clique(t);
        CHECK(chi == chromatic_number(t));
        CHECK(omega == chromatic_number(t));
        UndirectedGraph un = underlying(evaluate(t));
        CHECK(chi == undirected_chromatic_oracle(un));
        CHECK(omega == undirected_clique_oracle(un));
    }
}

TEST_CASE("homomorphism to transitive tournaments") {
    Digraph t3(3, {{0, 1}, {0, 2}, {1, 2}});
    auto h = hom_to_transitive_tournament(t3, 3);
    REQUIRE(h.has_value());
    CHECK(*h == std::vector<int>{1, 2, 3});
    CHECK_FALSE(hom_to_transitive_tournament(t3, 2).has_value());

    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    for (int k = 1; k <= 5; ++k) CHECK_FALSE(hom_to_transitive_tournament(c3, k).has_value());

    CHECK_THROWS_AS(hom_to_transitive_tournament(Digraph(2, {{0, 1}, {1, 0}}), 2),
                    std::invalid_argument);
}

TEST_CASE("hom exists exactly at k = chi_o") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_canonical(1 + seed % 9, 555 + seed);
        Digraph g = evaluate(t);
        int chi = chromatic_number(t);
        auto h = hom_to_transitive_tournament(g, chi);
        REQUIRE(h.has_value());
        for (const auto& [u, v] : g.arcs()) CHECK((*h)[u] < (*h)[v]);
        CHECK_FALSE(hom_to_transitive_tournament(g, chi - 1).has_value());
    }
}

TEST_CASE("oriented clique characterizations") {
    CHECK(is_oriented_clique(tree("a > b > c > d")));
    CHECK_FALSE(is_oriented_clique(tree("a + b")));
    CHECK_FALSE(is_oriented_clique(tree("(a + b) > c")));
    CHECK(brute_chromatic(evaluate(tree("(a + b) > c"))) == 2);
    CHECK(is_oriented_clique(tree("a")));
}

TEST_CASE("cotree isomorphism basics") {
    CHECK(cotree_isomorphic(tree("(a > b) + c"), tree("f + (d > e)")));
    CHECK_FALSE(cotree_isomorphic(tree("(a + b) > c"), tree("f > (d + e)")));
    CHECK_FALSE(brute_isomorphic(evaluate(tree("(a + b) > c")), evaluate(tree("f > (d + e)"))));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = random_canonical(1 + seed, 99 + seed);
        CHECK(cotree_isomorphic(t, t));
    }
}

TEST_CASE("isomorphism agrees with brute force on random pairs") {
    int positives = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto t1 = random_canonical(1 + seed % 7, 1000 + seed);
        auto t2 = random_canonical(1 + (seed * 7 + 3) % 7, 2000 + seed);
        bool fast = cotree_isomorphic(t1, t2);
        CHECK(fast == brute_isomorphic(evaluate(t1), evaluate(t2)));
        if (fast) ++positives;

        auto mutated = shuffle_union_children(permute_leaf_ids(t1, 3000 + seed), 4000 + seed);
        CHECK(cotree_isomorphic(t1, mutated));
        CHECK(brute_isomorphic(evaluate(t1), evaluate(mutated)));
    }
    CHECK(positives > 0);
}
