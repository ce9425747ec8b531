#pragma once

#include <variant>

#include "ocog/cotree.hpp"
#include "ocog/digraph.hpp"

namespace ocog {

//! Either a canonical di-co-tree over the input's vertex ids (the tree
//! evaluates to exactly the input digraph) or a forbidden-pattern witness
//! that re-checks true on the input.
class RecognitionOutcome {
public:
    explicit RecognitionOutcome(CanonicalCoExpr t) : value_(std::move(t)) {}
    explicit RecognitionOutcome(PatternWitness w) : value_(std::move(w)) {}

    bool accepted() const { return std::holds_alternative<CanonicalCoExpr>(value_); }
    const CanonicalCoExpr& tree() const { return std::get<CanonicalCoExpr>(value_); }
    const PatternWitness& witness() const { return std::get<PatternWitness>(value_); }

private:
    std::variant<CanonicalCoExpr, PatternWitness> value_;
};

//! Recursive decomposition: a single vertex is a leaf; a digraph with a
//! disconnected underlying graph splits into a union over its components
//! (ordered by minimum vertex id); one whose complement is disconnected
//! splits into an order node over its co-components, provided all arcs
//! between any two co-components exist and point one way and the resulting
//! relation is a total order. Any violation, or a connected/co-connected
//! digraph on >= 2 vertices, yields a forbidden-pattern witness. Throws on
//! an empty digraph.
RecognitionOutcome recognize(const Digraph& g);

// Second, independent recognizer: true iff find_forbidden_pattern(g) is
// absent.
bool is_oriented_cograph(const Digraph& g);

}  // namespace ocog
