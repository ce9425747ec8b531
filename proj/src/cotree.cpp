#include "ocog/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_set>
#include <utility>

namespace ocog {

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "Leaf";
        case NodeKind::Union: return "Union";
        case NodeKind::Order: return "Order";
    }
    return "?";
}

NodeId CoExpr::Builder::add_leaf(Vertex v) {
    Node n;
    n.kind = NodeKind::Leaf;
    n.vertex = v;
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CoExpr::Builder::add_node(NodeKind kind) {
    if (kind == NodeKind::Leaf) throw std::invalid_argument("add_node: use add_leaf for leaves");
    Node n;
    n.kind = kind;
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CoExpr::Builder::add_node(NodeKind kind, const std::vector<NodeId>& children) {
    NodeId id = add_node(kind);
    nodes_[id].children = children;
    return id;
}

void CoExpr::Builder::set_leaf(NodeId id, Vertex v) {
    if (id >= nodes_.size() || nodes_[id].kind != NodeKind::Leaf)
        throw std::invalid_argument("set_leaf: not a leaf");
    nodes_[id].vertex = v;
}

void CoExpr::Builder::add_child(NodeId parent, NodeId child) {
    if (parent >= nodes_.size()) throw std::invalid_argument("add_child: bad parent id");
    if (nodes_[parent].kind == NodeKind::Leaf)
        throw std::invalid_argument("add_child: parent is a leaf");
    nodes_[parent].children.push_back(child);
}

CoExpr CoExpr::Builder::finish(NodeId root) {
    if (root >= nodes_.size()) throw std::invalid_argument("finish: bad root id");
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<Vertex> leaves;
    std::vector<NodeId> stack{root};
    seen[root] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[id];
        if (nd.kind == NodeKind::Leaf) {
            if (nd.vertex < 0) throw std::invalid_argument("finish: negative leaf id");
            if (!nd.children.empty()) throw std::invalid_argument("finish: leaf with children");
            leaves.push_back(nd.vertex);
            continue;
        }
        if (nd.children.size() < 2)
            throw std::invalid_argument("finish: internal node with fewer than 2 children");
        for (NodeId c : nd.children) {
            if (c >= nodes_.size()) throw std::invalid_argument("finish: bad child id");
            if (seen[c]) throw std::invalid_argument("finish: node used more than once");
            seen[c] = 1;
            ++visited;
            stack.push_back(c);
        }
    }
    if (visited != nodes_.size())
        throw std::invalid_argument("finish: arena contains unreachable nodes");
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end())
        throw std::invalid_argument("finish: duplicate leaf id");
    CoExpr out;
    out.nodes_ = std::move(nodes_);
    out.root_ = root;
    out.leaf_count_ = static_cast<int>(leaves.size());
    nodes_.clear();
    return out;
}

CoExpr CoExpr::leaf(Vertex v) {
    Builder b;
    NodeId id = b.add_leaf(v);
    return b.finish(id);
}

CoExpr CoExpr::make(NodeKind kind, std::vector<CoExpr> children) {
    Builder b;
    std::vector<NodeId> roots;
    roots.reserve(children.size());
    for (const CoExpr& c : children) {
        NodeId off = static_cast<NodeId>(b.size());
        for (const Node& nd : c.nodes_) {
            if (nd.kind == NodeKind::Leaf) {
                b.add_leaf(nd.vertex);
            } else {
                NodeId id = b.add_node(nd.kind);
                for (NodeId ch : nd.children) b.add_child(id, ch + off);
            }
        }
        roots.push_back(off + c.root_);
    }
    NodeId top = b.add_node(kind, roots);
    return b.finish(top);
}

std::vector<NodeId> postorder(const CoExpr& t) {
    std::vector<NodeId> out;
    out.reserve(t.node_count());
    std::vector<std::pair<NodeId, std::size_t>> st;
    st.emplace_back(t.root(), 0);
    while (!st.empty()) {
        auto& [id, ci] = st.back();
        const auto& nd = t.node(id);
        if (ci < nd.children.size()) {
            NodeId c = nd.children[ci];
            ++ci;
            st.emplace_back(c, 0);
        } else {
            out.push_back(id);
            st.pop_back();
        }
    }
    return out;
}

bool structurally_equal(const CoExpr& a, const CoExpr& b) {
    if (a.node_count() != b.node_count()) return false;
    std::vector<std::pair<NodeId, NodeId>> st{{a.root(), b.root()}};
    while (!st.empty()) {
        auto [x, y] = st.back();
        st.pop_back();
        const auto& na = a.node(x);
        const auto& nb = b.node(y);
        if (na.kind != nb.kind || na.vertex != nb.vertex ||
            na.children.size() != nb.children.size())
            return false;
        for (std::size_t i = 0; i < na.children.size(); ++i)
            st.emplace_back(na.children[i], nb.children[i]);
    }
    return true;
}

bool is_canonical(const CoExpr& t) {
    for (NodeId id = 0; id < t.node_count(); ++id) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) continue;
        for (NodeId c : nd.children)
            if (t.node(c).kind == nd.kind) return false;
    }
    return true;
}

CanonicalCoExpr CanonicalCoExpr::checked(CoExpr t) {
    if (!is_canonical(t))
        throw std::invalid_argument("tree is not canonical: same-kind nesting");
    return CanonicalCoExpr(std::move(t));
}

CanonicalCoExpr canonicalize(const CoExpr& t) {
    CoExpr::Builder b;
    // Per original node: a materialized new-arena id (leaves, and internal
    // nodes whose parent has a different kind), or a pending child list that
    // the parent splices.
    std::vector<NodeId> mat_id(t.node_count(), 0);
    std::vector<char> is_mat(t.node_count(), 0);
    std::vector<std::vector<NodeId>> pending(t.node_count());

    auto materialize = [&](NodeId u) -> NodeId {
        if (is_mat[u]) return mat_id[u];
        auto& list = pending[u];
        NodeId id = list.size() == 1 ? list[0] : b.add_node(t.node(u).kind, list);
        list.clear();
        list.shrink_to_fit();
        is_mat[u] = 1;
        mat_id[u] = id;
        return id;
    };

    for (NodeId u : postorder(t)) {
        const auto& nd = t.node(u);
        if (nd.kind == NodeKind::Leaf) {
            mat_id[u] = b.add_leaf(nd.vertex);
            is_mat[u] = 1;
            continue;
        }
        std::vector<NodeId> merged;
        for (NodeId c : nd.children) {
            if (t.node(c).kind == nd.kind) {
                merged.insert(merged.end(), pending[c].begin(), pending[c].end());
                pending[c].clear();
                pending[c].shrink_to_fit();
            } else {
                merged.push_back(materialize(c));
            }
        }
        pending[u] = std::move(merged);
    }
    return CanonicalCoExpr(b.finish(materialize(t.root())));
}

Digraph evaluate(const CoExpr& t) {
    const std::size_t count = t.node_count();
    std::vector<int> beg(count, 0), end(count, 0);
    std::vector<Vertex> leafseq;
    leafseq.reserve(t.leaf_count());
    std::vector<std::pair<NodeId, std::size_t>> st;
    st.emplace_back(t.root(), 0);
    beg[t.root()] = 0;
    while (!st.empty()) {
        auto& [id, ci] = st.back();
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) {
            leafseq.push_back(nd.vertex);
            end[id] = static_cast<int>(leafseq.size());
            st.pop_back();
            continue;
        }
        if (ci < nd.children.size()) {
            NodeId c = nd.children[ci];
            ++ci;
            beg[c] = static_cast<int>(leafseq.size());
            st.emplace_back(c, 0);
        } else {
            end[id] = static_cast<int>(leafseq.size());
            st.pop_back();
        }
    }

    const int n = static_cast<int>(leafseq.size());
    std::vector<char> seen(n, 0);
    for (Vertex v : leafseq) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("evaluate: leaf ids must be 0..n-1");
        if (seen[v]) throw std::invalid_argument("evaluate: duplicate leaf id");
        seen[v] = 1;
    }

    std::vector<Arc> arcs;
    for (NodeId id = 0; id < count; ++id) {
        const auto& nd = t.node(id);
        if (nd.kind != NodeKind::Order) continue;
        for (std::size_t i = 0; i < nd.children.size(); ++i)
            for (std::size_t j = i + 1; j < nd.children.size(); ++j) {
                NodeId ci = nd.children[i], cj = nd.children[j];
                for (int a = beg[ci]; a < end[ci]; ++a)
                    for (int bidx = beg[cj]; bidx < end[cj]; ++bidx)
                        arcs.emplace_back(leafseq[a], leafseq[bidx]);
            }
    }
    return Digraph(n, std::move(arcs));
}

namespace {

struct Token {
    enum Kind { Ident, Plus, Greater, LParen, RParen, End } kind;
    std::string_view text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, {}, pos_};
            return;
        }
        const std::size_t start = pos_;
        const char c = s_[pos_];
        if (c == '+') {
            ++pos_;
            tok_ = {Token::Plus, s_.substr(start, 1), start};
        } else if (c == '>') {
            ++pos_;
            tok_ = {Token::Greater, s_.substr(start, 1), start};
        } else if (c == '(') {
            ++pos_;
            tok_ = {Token::LParen, s_.substr(start, 1), start};
        } else if (c == ')') {
            ++pos_;
            tok_ = {Token::RParen, s_.substr(start, 1), start};
        } else if (ident_char(c)) {
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start), start};
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token tok_{Token::End, {}, 0};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ParsedExpr run() {
        NodeId root = parse_union();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        assign_ids();
        ParsedExpr out{builder_.finish(root), {}};
        out.names.resize(names_.size());
        for (std::size_t i = 0; i < names_.size(); ++i) out.names[final_id_[i]] = names_[i];
        return out;
    }

private:
    NodeId parse_union() {
        std::vector<NodeId> terms{parse_order()};
        while (lex_.peek().kind == Token::Plus) {
            lex_.next();
            terms.push_back(parse_order());
        }
        if (terms.size() == 1) return terms[0];
        return builder_.add_node(NodeKind::Union, terms);
    }

    NodeId parse_order() {
        std::vector<NodeId> factors{parse_factor()};
        while (lex_.peek().kind == Token::Greater) {
            lex_.next();
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return factors[0];
        return builder_.add_node(NodeKind::Order, factors);
    }

    NodeId parse_factor() {
        const Token t = lex_.next();
        if (t.kind == Token::Ident) {
            std::string name(t.text);
            if (!seen_names_.insert(name).second)
                throw ParseError("duplicate leaf name '" + name + "'", t.pos);
            names_.push_back(std::move(name));
            NodeId id = builder_.add_leaf(static_cast<Vertex>(names_.size() - 1));
            leaf_node_.push_back(id);
            return id;
        }
        if (t.kind == Token::LParen) {
            NodeId inner = parse_union();
            const Token close = lex_.next();
            if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
            return inner;
        }
        throw ParseError("expected identifier or '('", t.pos);
    }

    // Leaf ids: numeric values when the names are canonical decimals forming
    // {0..n-1}; left-to-right order otherwise.
    void assign_ids() {
        const std::size_t n = names_.size();
        final_id_.resize(n);
        std::vector<Vertex> numeric(n);
        bool usable = true;
        for (std::size_t i = 0; i < n && usable; ++i) {
            const std::string& s = names_[i];
            if (s.size() > 9 || (s.size() > 1 && s[0] == '0') ||
                !std::all_of(s.begin(), s.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                usable = false;
                break;
            }
            numeric[i] = static_cast<Vertex>(std::stol(s));
        }
        if (usable) {
            std::vector<Vertex> sorted(numeric);
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < n; ++i)
                if (sorted[i] != static_cast<Vertex>(i)) {
                    usable = false;
                    break;
                }
        }
        for (std::size_t i = 0; i < n; ++i) {
            final_id_[i] = usable ? numeric[i] : static_cast<Vertex>(i);
            builder_.set_leaf(leaf_node_[i], final_id_[i]);
        }
    }

    Lexer lex_;
    CoExpr::Builder builder_;
    std::unordered_set<std::string> seen_names_;
    std::vector<std::string> names_;    // in leaf order
    std::vector<NodeId> leaf_node_;     // arena id per leaf, in leaf order
    std::vector<Vertex> final_id_;      // assigned vertex id per leaf order
};

}  // namespace

ParsedExpr parse(std::string_view text) { return Parser(text).run(); }

namespace {

std::string serialize_impl(const CoExpr& t, const std::vector<std::string>* names) {
    struct Tok {
        bool literal;
        const char* lit;
        NodeId id;
        bool has_parent;
        NodeKind parent;
    };
    std::string out;
    std::vector<Tok> st;
    st.push_back({false, nullptr, t.root(), false, NodeKind::Leaf});
    while (!st.empty()) {
        Tok tok = st.back();
        st.pop_back();
        if (tok.literal) {
            out += tok.lit;
            continue;
        }
        const auto& nd = t.node(tok.id);
        if (nd.kind == NodeKind::Leaf) {
            if (names) {
                out += (*names)[nd.vertex];
            } else {
                out += std::to_string(nd.vertex);
            }
            continue;
        }
        const char* op = nd.kind == NodeKind::Union ? " + " : " > ";
        const bool parens =
            tok.has_parent && !(tok.parent == NodeKind::Union && nd.kind == NodeKind::Order);
        if (parens) st.push_back({true, ")", 0, false, NodeKind::Leaf});
        for (std::size_t i = nd.children.size(); i-- > 0;) {
            st.push_back({false, nullptr, nd.children[i], true, nd.kind});
            if (i > 0) st.push_back({true, op, 0, false, NodeKind::Leaf});
        }
        if (parens) st.push_back({true, "(", 0, false, NodeKind::Leaf});
    }
    return out;
}

}  // namespace

std::string serialize(const CoExpr& t) { return serialize_impl(t, nullptr); }

std::string serialize(const CoExpr& t, const std::vector<std::string>& names) {
    return serialize_impl(t, &names);
}

CanonicalCoExpr random_canonical(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_canonical: n must be >= 1");
    std::mt19937_64 rng(seed);
    CoExpr::Builder b;
    if (n == 1) return CanonicalCoExpr::checked(b.finish(b.add_leaf(0)));

    constexpr NodeId kNone = static_cast<NodeId>(-1);
    struct Task {
        NodeId parent;
        int size;
        NodeKind kind;
    };
    const NodeKind root_kind = (rng() & 1) ? NodeKind::Union : NodeKind::Order;
    NodeId root = kNone;
    Vertex next_leaf = 0;
    std::vector<Task> st{{kNone, n, root_kind}};
    std::vector<int> cuts;
    while (!st.empty()) {
        Task task = st.back();
        st.pop_back();
        NodeId id;
        if (task.size == 1) {
            id = b.add_leaf(next_leaf++);
        } else {
            id = b.add_node(task.kind);
            int max_arity = std::min(task.size, rng() % 8 == 0 ? 12 : 5);
            int arity = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_arity - 1));
            cuts.clear();
            while (static_cast<int>(cuts.size()) < arity - 1) {
                int c = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(task.size - 1));
                if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.push_back(task.size);
            const NodeKind child_kind =
                task.kind == NodeKind::Union ? NodeKind::Order : NodeKind::Union;
            // Pushed right to left so pops build children left to right and
            // leaf ids ascend in leaf order.
            int prev = task.size;
            for (std::size_t i = cuts.size(); i-- > 0;) {
                int lo = i == 0 ? 0 : cuts[i - 1];
                st.push_back({id, prev - lo, child_kind});
                prev = lo;
            }
        }
        if (task.parent == kNone) {
            root = id;
        } else {
            b.add_child(task.parent, id);
        }
    }
    return CanonicalCoExpr::checked(b.finish(root));
}

}  // namespace ocog
