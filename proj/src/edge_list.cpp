#include "ocog/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace ocog {

namespace {

bool valid_name(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// Reads the next line that is not blank and not a '#' comment.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] != '#') return true;
    }
    return false;
}

}  // namespace

NamedDigraph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no))
        throw InputError("edge list: empty input, expected header 'n m'", 1);

    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw InputError("edge list: header must be two integers 'n m'", line_no);
        if (n < 0 || m < 0) throw InputError("edge list: negative count in header", line_no);
    }

    std::unordered_map<std::string, Vertex> id_of;
    std::vector<std::string> names;
    std::vector<Arc> arcs;
    auto intern = [&](const std::string& name, int at_line) {
        if (!valid_name(name))
            throw InputError("edge list: vertex name '" + name +
                                 "' is not of the form [A-Za-z0-9_]+",
                             at_line);
        auto it = id_of.find(name);
        if (it != id_of.end()) return it->second;
        if (static_cast<long long>(names.size()) >= n)
            throw InputError("edge list: more than n distinct vertex names", at_line);
        Vertex id = static_cast<Vertex>(names.size());
        id_of.emplace(name, id);
        names.push_back(name);
        return id;
    };

    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no))
            throw InputError("edge list: expected " + std::to_string(m) + " arc lines, got " +
                                 std::to_string(i),
                             line_no + 1);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw InputError("edge list: arc line must be 'u v'", line_no);
        Vertex u = intern(a, line_no);
        Vertex v = intern(b, line_no);
        if (u == v) throw InputError("edge list: self-loop on '" + a + "'", line_no);
        arcs.emplace_back(u, v);
    }
    if (next_content_line(in, line, line_no))
        throw InputError("edge list: trailing content after " + std::to_string(m) + " arcs",
                         line_no);

    while (static_cast<long long>(names.size()) < n) {
        std::string name = "v" + std::to_string(names.size());
        if (id_of.count(name))
            throw InputError("edge list: cannot auto-name isolated vertex, '" + name +
                                 "' already used",
                             line_no);
        id_of.emplace(name, static_cast<Vertex>(names.size()));
        names.push_back(std::move(name));
    }

    // As in expression parsing: names that are canonical decimals forming
    // {0..n-1} are used as the ids themselves, so written edge lists read
    // back to the identical digraph.
    {
        std::vector<Vertex> numeric(names.size());
        bool usable = !names.empty();
        for (std::size_t i = 0; i < names.size() && usable; ++i) {
            const std::string& s = names[i];
            usable = s.size() <= 9 && !(s.size() > 1 && s[0] == '0') &&
                     std::all_of(s.begin(), s.end(), [](char c) {
                         return std::isdigit(static_cast<unsigned char>(c));
                     });
            if (usable) numeric[i] = static_cast<Vertex>(std::stol(s));
        }
        if (usable) {
            std::vector<Vertex> sorted(numeric);
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size() && usable; ++i)
                usable = sorted[i] == static_cast<Vertex>(i);
        }
        if (usable) {
            for (auto& [u, v] : arcs) {
                u = numeric[u];
                v = numeric[v];
            }
            for (std::size_t i = 0; i < names.size(); ++i) names[i] = std::to_string(i);
        }
    }

    return NamedDigraph{Digraph(static_cast<Vertex>(n), std::move(arcs)), std::move(names)};
}

void write_edge_list(std::ostream& out, const NamedDigraph& g) {
    out << g.graph.vertex_count() << ' ' << g.graph.arc_count() << '\n';
    for (const auto& [u, v] : g.graph.arcs()) out << g.names[u] << ' ' << g.names[v] << '\n';
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

}  // namespace ocog
