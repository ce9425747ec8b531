#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ocog/check_suite.hpp"
#include "ocog/cotree.hpp"
#include "ocog/digraph.hpp"
#include "ocog/edge_list.hpp"

namespace ocog {

enum class InputKind { EdgeListFile, ExpressionFile, InlineExpression };

//! A resolved command input: dense digraph and/or expression tree plus the
//! id <-> name bijection.
struct InputDocument {
    InputKind kind;
    std::optional<Digraph> graph;         // present for edge-list sources
    std::optional<CanonicalCoExpr> tree;  // present for expression sources
    std::vector<std::string> names;

    const Digraph& ensure_graph();  // evaluates the tree on demand
};

// An argument naming an existing file is read as a file (edge list when its
// first content line is exactly two integers, expression otherwise); any
// other argument is an inline expression. Throws InputError / ParseError.
InputDocument load_input(const std::string& arg);

struct RecognizeOpts {
    bool json = false;
};
struct ColorOpts {
    bool json = false;
    bool assignment = false;
    bool verify = false;
    bool oracle = false;
    int budget = 8;
};
struct LongestPathOpts {
    bool json = false;
};
struct IsomorphicOpts {
    bool json = false;
};
struct CliqueOpts {
    bool json = false;
};
struct HomOpts {
    bool json = false;
    int k = 1;
};
struct GenerateOpts {
    bool json = false;
    std::uint64_t seed = 1;
    int n = 1;
    bool edges = false;  // emit the evaluated edge list instead of the expression
};
struct CheckOpts {
    bool json = false;
    CheckParams params;
};

// Exit codes: 0 success / affirmative verdict, 1 negative verdict, 2 usage
// or input error.
int cmd_recognize(const std::string& input, const RecognizeOpts& opts, std::ostream& out,
                  std::ostream& err);
int cmd_color(const std::string& input, const ColorOpts& opts, std::ostream& out,
              std::ostream& err);
int cmd_longest_path(const std::string& input, const LongestPathOpts& opts, std::ostream& out,
                     std::ostream& err);
int cmd_isomorphic(const std::string& first, const std::string& second,
                   const IsomorphicOpts& opts, std::ostream& out, std::ostream& err);
int cmd_oriented_clique(const std::string& input, const CliqueOpts& opts, std::ostream& out,
                        std::ostream& err);
int cmd_hom(const std::string& input, const HomOpts& opts, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOpts& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOpts& opts, std::ostream& out, std::ostream& err);

}  // namespace ocog
