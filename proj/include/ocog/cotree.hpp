#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ocog/digraph.hpp"

namespace ocog {

enum class NodeKind : std::uint8_t { Leaf, Union, Order };

std::string to_string(NodeKind k);

using NodeId = std::uint32_t;

//! An expression tree over graph vertices: leaves carry vertex ids, internal
//! nodes are n-ary disjoint unions or order compositions (>= 2 children,
//! children ordered left to right).
//!
//! Nodes live in a flat arena indexed by NodeId, so trees with millions of
//! leaves need no recursive destruction and can be walked with explicit
//! stacks. Leaf vertex ids are unique across the tree; evaluate() further
//! requires them to be exactly {0..leaf_count-1}.
class CoExpr {
public:
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        Vertex vertex = -1;            // leaves only
        std::vector<NodeId> children;  // internal nodes only
    };

    class Builder {
    public:
        NodeId add_leaf(Vertex v);
        NodeId add_node(NodeKind kind);  // children appended via add_child
        NodeId add_node(NodeKind kind, const std::vector<NodeId>& children);
        void add_child(NodeId parent, NodeId child);
        void set_leaf(NodeId id, Vertex v);
        std::size_t size() const { return nodes_.size(); }

        // Validates that root reaches every arena node exactly once, that
        // internal nodes have >= 2 children, and that leaf ids are unique.
        CoExpr finish(NodeId root);

    private:
        std::vector<Node> nodes_;
    };

    static CoExpr leaf(Vertex v);
    static CoExpr make(NodeKind kind, std::vector<CoExpr> children);

    const Node& node(NodeId id) const { return nodes_[id]; }
    NodeId root() const { return root_; }
    std::size_t node_count() const { return nodes_.size(); }
    int leaf_count() const { return leaf_count_; }

private:
    CoExpr() = default;
    friend class Builder;

    std::vector<Node> nodes_;
    NodeId root_ = 0;
    int leaf_count_ = 0;
};

// Children before parents; the root is last.
std::vector<NodeId> postorder(const CoExpr& t);

// Same shape, kinds and leaf vertex ids, independent of arena layout.
bool structurally_equal(const CoExpr& a, const CoExpr& b);

// No internal node has an internal child of the same kind.
bool is_canonical(const CoExpr& t);

//! A CoExpr on which union and order kinds strictly alternate along every
//! root-to-leaf path. The tree algorithms take this type; obtain one via
//! canonicalize(), random_canonical(), recognize() or checked().
class CanonicalCoExpr {
public:
    static CanonicalCoExpr checked(CoExpr t);  // throws std::invalid_argument

    const CoExpr& expr() const { return expr_; }

private:
    explicit CanonicalCoExpr(CoExpr t) : expr_(std::move(t)) {}
    friend CanonicalCoExpr canonicalize(const CoExpr& t);

    CoExpr expr_;
};

// Splices same-kind parent/child chains in place (left-to-right order kept)
// and contracts single-child nodes. Preserves evaluate() exactly; idempotent.
CanonicalCoExpr canonicalize(const CoExpr& t);

// Leaf -> isolated vertex; Union -> disjoint union; Order -> disjoint union
// plus all arcs from child i to child j for i < j. Requires leaf ids
// {0..leaf_count-1}.
Digraph evaluate(const CoExpr& t);
inline Digraph evaluate(const CanonicalCoExpr& t) { return evaluate(t.expr()); }

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), pos(position) {}
    std::size_t pos;  // byte offset into the input
};

struct ParsedExpr {
    CoExpr expr;
    std::vector<std::string> names;  // indexed by vertex id
};

// Grammar: expr := term ('+' term)*, term := factor ('>' factor)*,
// factor := IDENT | '(' expr ')', IDENT := [A-Za-z0-9_]+; '>' binds tighter
// than '+', unparenthesized chains become one n-ary node, whitespace is
// insignificant. Leaf ids: if every identifier is a canonical decimal and
// the values are exactly {0..n-1}, the numeric values are used (this makes
// parse(serialize(t)) the identity); otherwise ids follow left-to-right
// leaf order. Throws ParseError on syntax errors and duplicate leaf names.
ParsedExpr parse(std::string_view text);

// Emits decimal vertex ids; minimal parentheses under the grammar above.
std::string serialize(const CoExpr& t);

// Same, with names[vertex] substituted for each leaf.
std::string serialize(const CoExpr& t, const std::vector<std::string>& names);

// Deterministic for fixed (n, seed); exactly n leaves with ids 0..n-1 in
// left-to-right order. Throws std::invalid_argument for n < 1.
CanonicalCoExpr random_canonical(int n, std::uint64_t seed);

}  // namespace ocog
