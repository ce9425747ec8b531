#include "ocog/recognition.hpp"

#include "doctest.h"
#include "ocog/check_suite.hpp"

using namespace ocog;

TEST_CASE("transitive tournament decomposes into singleton order parts") {
    auto outcome = recognize(Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(outcome.accepted());
    CHECK(serialize(outcome.tree().expr()) == "0 > 1 > 2");
}

TEST_CASE("intransitive path yields a D1 witness") {
    auto outcome = recognize(Digraph(3, {{0, 1}, {1, 2}}));
    REQUIRE_FALSE(outcome.accepted());
    CHECK(outcome.witness().pattern == Pattern::D1);
    CHECK(outcome.witness().vertices == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("triangle vs tournament membership") {
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    Digraph t3(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_oriented_cograph(t3));
    CHECK_FALSE(is_oriented_cograph(c3));
    CHECK(is_oriented_cograph(disjoint_union({t3, t3})));
    CHECK_FALSE(recognize(c3).accepted());
    CHECK(recognize(disjoint_union({t3, t3})).accepted());
}

TEST_CASE("recognize rejects the empty digraph") {
    CHECK_THROWS_AS(recognize(Digraph(0, {})), std::invalid_argument);
}

TEST_CASE("union components are ordered by minimum vertex id") {
    // vertices: component {1,3} (arc 3->1) and isolated {0}, {2}
    auto outcome = recognize(Digraph(4, {{3, 1}}));
    REQUIRE(outcome.accepted());
    CHECK(serialize(outcome.tree().expr()) == "0 + 3 > 1 + 2");
    CHECK(evaluate(outcome.tree()) == Digraph(4, {{3, 1}}));
}

TEST_CASE("round trip on random canonical trees up to n=200") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = seed < 25 ? 1 + static_cast<int>(seed * 3) : 150 + static_cast<int>(seed);
        auto t = random_canonical(n, 4242 + seed);
        Digraph g = evaluate(t);
        auto outcome = recognize(g);
        REQUIRE(outcome.accepted());
        CHECK(evaluate(outcome.tree()) == g);
        CHECK(is_canonical(outcome.tree().expr()));
    }
}

TEST_CASE("agreement with the pattern-free recognizer, exhaustively to n=4") {
    for (int n = 1; n <= 4; ++n)
        for (const Digraph& g : all_loopfree_digraphs(n)) {
            auto outcome = recognize(g);
            REQUIRE(outcome.accepted() == is_oriented_cograph(g));
            if (outcome.accepted()) {
                REQUIRE(evaluate(outcome.tree()) == g);
                CHECK(is_transitive(g));
                CHECK(is_oriented(g));
            } else {
                REQUIRE(witness_holds(g, outcome.witness()));
            }
        }
}

TEST_CASE("agreement sampled at n=5,6") {
    for (int i = 0; i < 200; ++i) {
        Digraph g = random_oriented_digraph(5 + i % 2, 60'000 + i);
        auto outcome = recognize(g);
        REQUIRE(outcome.accepted() == is_oriented_cograph(g));
        if (outcome.accepted())
            CHECK(evaluate(outcome.tree()) == g);
        else
            CHECK(witness_holds(g, outcome.witness()));
    }
}
