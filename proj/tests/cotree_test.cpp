#include "ocog/cotree.hpp"

#include <set>

#include "doctest.h"
#include "ocog/digraph.hpp"

using namespace ocog;

namespace {

std::vector<Vertex> leaves_left_to_right(const CoExpr& t) {
    std::vector<Vertex> out;
    for (NodeId id : postorder(t))
        if (t.node(id).kind == NodeKind::Leaf) out.push_back(t.node(id).vertex);
    return out;
}

}  // namespace

TEST_CASE("evaluate basics") {
    CHECK(evaluate(parse("a > b").expr) == Digraph(2, {{0, 1}}));
    CHECK(evaluate(parse("a > b > c").expr) == Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(evaluate(parse("a + b").expr) == Digraph(2, {}));
    CHECK(evaluate(parse("(a + b) > c").expr) == Digraph(3, {{0, 2}, {1, 2}}));
}

TEST_CASE("evaluate rejects non-dense leaf ids") {
    CoExpr sparse = CoExpr::make(NodeKind::Union, {CoExpr::leaf(0), CoExpr::leaf(5)});
    CHECK_THROWS_AS(evaluate(sparse), std::invalid_argument);
}

TEST_CASE("builder rejects malformed trees") {
    CHECK_THROWS_AS(CoExpr::make(NodeKind::Union, {CoExpr::leaf(0), CoExpr::leaf(0)}),
                    std::invalid_argument);  // duplicate leaf
    CoExpr::Builder b;
    NodeId u = b.add_node(NodeKind::Union);
    b.add_child(u, b.add_leaf(0));
    CHECK_THROWS_AS(b.finish(u), std::invalid_argument);  // single child
}

TEST_CASE("canonicalize flattens same-kind chains") {
    CoExpr nested_union = CoExpr::make(
        NodeKind::Union,
        {CoExpr::make(NodeKind::Union, {CoExpr::leaf(0), CoExpr::leaf(1)}), CoExpr::leaf(2)});
    CHECK(structurally_equal(canonicalize(nested_union).expr(), parse("0 + 1 + 2").expr));

    CoExpr nested_order = CoExpr::make(
        NodeKind::Order,
        {CoExpr::leaf(0), CoExpr::make(NodeKind::Order, {CoExpr::leaf(1), CoExpr::leaf(2)})});
    CHECK(structurally_equal(canonicalize(nested_order).expr(), parse("0 > 1 > 2").expr));

    CoExpr flat = parse("0 > 1").expr;
    CHECK(structurally_equal(canonicalize(flat).expr(), flat));
}

TEST_CASE("canonicalize preserves evaluate and is idempotent") {
    const char* exprs[] = {
        "((a > b) > c) > d",
        "(a + b) + (c + (d + e))",
        "((a > b) + c) > (d + (e > f))",
        "(a > (b > c)) + ((d + e) > f) + g",
    };
    for (const char* s : exprs) {
        CoExpr t = parse(s).expr;
        auto canon = canonicalize(t);
        CHECK(is_canonical(canon.expr()));
        CHECK(evaluate(canon.expr()) == evaluate(t));
        CHECK(structurally_equal(canonicalize(canon.expr()).expr(), canon.expr()));
    }
}

TEST_CASE("alternation invariant on canonical trees") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_canonical(12, seed);
        CHECK(is_canonical(t.expr()));
        const CoExpr& e = t.expr();
        for (NodeId id = 0; id < e.node_count(); ++id) {
            const auto& nd = e.node(id);
            if (nd.kind == NodeKind::Leaf) continue;
            CHECK(nd.children.size() >= 2);
            for (NodeId c : nd.children) CHECK(e.node(c).kind != nd.kind);
        }
    }
}

TEST_CASE("parse grammar and precedence") {
    CHECK(serialize(parse("a > b > c").expr) == "0 > 1 > 2");
    auto mixed = parse("(a > b) + c");
    CHECK(mixed.expr.node(mixed.expr.root()).kind == NodeKind::Union);
    CHECK(serialize(mixed.expr, mixed.names) == "a > b + c");  // '>' binds tighter
    auto forced = parse("(a + b) > c");
    CHECK(serialize(forced.expr, forced.names) == "(a + b) > c");
    CHECK(parse(" a>b ").names == std::vector<std::string>{"a", "b"});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("a > a"), ParseError);
    try {
        parse("a > a");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
    try {
        parse("a >");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
    CHECK_THROWS_AS(parse("(a > b"), ParseError);
    CHECK_THROWS_AS(parse("a b"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("a ? b"), ParseError);
}

TEST_CASE("serialize/parse identities") {
    // text identity up to whitespace
    auto p = parse("(a>b)+(c>d)");
    CHECK(serialize(p.expr, p.names) == "a > b + c > d");
    auto q = parse(serialize(p.expr, p.names));
    CHECK(structurally_equal(q.expr, p.expr));

    // tree identity, including non-ascending leaf ids via the numeric rule
    auto r = parse("1 > 0");
    CHECK(leaves_left_to_right(r.expr) == std::vector<Vertex>{1, 0});
    CHECK(serialize(r.expr) == "1 > 0");
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = random_canonical(1 + seed % 15, 500 + seed);
        CHECK(structurally_equal(parse(serialize(t.expr())).expr, t.expr()));
    }
}

TEST_CASE("numeric leaf rule needs a dense permutation") {
    // "2 > 5" is not {0,1}, so ids fall back to left-to-right order
    auto p = parse("2 > 5");
    CHECK(leaves_left_to_right(p.expr) == std::vector<Vertex>{0, 1});
    CHECK(p.names == std::vector<std::string>{"2", "5"});
}

TEST_CASE("random_canonical contract") {
    CHECK_THROWS_AS(random_canonical(0, 1), std::invalid_argument);
    auto one = random_canonical(1, 9);
    CHECK(one.expr().leaf_count() == 1);
    CHECK(one.expr().node(one.expr().root()).kind == NodeKind::Leaf);

    std::set<NodeKind> roots;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto two = random_canonical(2, seed);
        CHECK(two.expr().leaf_count() == 2);
        roots.insert(two.expr().node(two.expr().root()).kind);
    }
    CHECK(roots == std::set<NodeKind>{NodeKind::Union, NodeKind::Order});

    CHECK(serialize(random_canonical(6, 42).expr()) == serialize(random_canonical(6, 42).expr()));
    CHECK(structurally_equal(random_canonical(200, 7).expr(), random_canonical(200, 7).expr()));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = random_canonical(17, seed);
        auto ls = leaves_left_to_right(t.expr());
        for (std::size_t i = 0; i < ls.size(); ++i) CHECK(ls[i] == static_cast<Vertex>(i));
    }
}

TEST_CASE("evaluated random trees are oriented co-graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph g = evaluate(random_canonical(1 + seed % 9, 900 + seed));
        CHECK_FALSE(find_forbidden_pattern(g).has_value());
    }
}

TEST_CASE("checked rejects non-canonical trees") {
    CoExpr nested = CoExpr::make(
        NodeKind::Union,
        {CoExpr::make(NodeKind::Union, {CoExpr::leaf(0), CoExpr::leaf(1)}), CoExpr::leaf(2)});
    CHECK_THROWS_AS(CanonicalCoExpr::checked(nested), std::invalid_argument);
    CHECK_NOTHROW(CanonicalCoExpr::checked(parse("0 + 1 + 2").expr));
}
