#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocog/digraph.hpp"

namespace ocog {

struct InputError : std::runtime_error {
    InputError(const std::string& msg, int line_number)
        : std::runtime_error(msg), line(line_number) {}
    int line;
};

//! A digraph together with external vertex names; names[id] is the name of
//! vertex id, and the mapping is a bijection over all vertices.
struct NamedDigraph {
    Digraph graph;
    std::vector<std::string> names;
};

// Format: header "n m", then m lines "u v" for the arc u -> v; blank lines
// and '#' comments are skipped. Names use the identifier charset
// [A-Za-z0-9_]+ and are mapped to dense ids in first-appearance order,
// except that names forming the decimal set {0..n-1} are used as the ids
// themselves (so written lists read back identically); ids never mentioned
// on an arc line are auto-named "v<id>". Throws InputError with a line
// number on malformed input.
NamedDigraph read_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const NamedDigraph& g);

// names[id] for all ids, as decimal strings ("0", "1", ...).
std::vector<std::string> default_names(int n);

}  // namespace ocog
