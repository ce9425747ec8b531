#include "ocog/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ocog/algorithms.hpp"
#include "ocog/oracle.hpp"
#include "ocog/recognition.hpp"

namespace ocog {

namespace {

using nlohmann::json;

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        err << "error: " << e.what() << " (line " << e.line << ")\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at offset " << e.pos << ")\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

bool looks_like_edge_list(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        std::string extra;
        return (ls >> a >> b) && !(ls >> extra);
    }
    return false;
}

InputDocument expression_input(InputKind kind, const std::string& text) {
    ParsedExpr parsed = parse(text);
    InputDocument doc{kind, std::nullopt, canonicalize(parsed.expr), std::move(parsed.names)};
    return doc;
}

std::string witness_names(const PatternWitness& w, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) s += ',';
        s += names[w.vertices[i]];
    }
    return s;
}

json witness_json(const PatternWitness& w, const std::vector<std::string>& names) {
    json j;
    j["pattern"] = to_string(w.pattern);
    j["vertices"] = json::array();
    for (Vertex v : w.vertices) j["vertices"].push_back(names[v]);
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

OracleBudget budget_of(int max_vertices) {
    OracleBudget b;
    b.max_vertices = max_vertices;
    return b;
}

}  // namespace

const Digraph& InputDocument::ensure_graph() {
    if (!graph) graph = evaluate(*tree);
    return *graph;
}

InputDocument load_input(const std::string& arg) {
    if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
        std::ifstream f(arg);
        if (!f) throw InputError("cannot open file '" + arg + "'", 0);
        std::stringstream buf;
        buf << f.rdbuf();
        const std::string content = buf.str();
        if (content.find_first_not_of(" \t\r\n") == std::string::npos)
            throw InputError("input file '" + arg + "' is empty", 1);
        if (looks_like_edge_list(content)) {
            std::istringstream in(content);
            NamedDigraph named = read_edge_list(in);
            return InputDocument{InputKind::EdgeListFile, std::move(named.graph), std::nullopt,
                                 std::move(named.names)};
        }
        return expression_input(InputKind::ExpressionFile, content);
    }
    return expression_input(InputKind::InlineExpression, arg);
}

namespace {

// Edge-list inputs go through recognition; expression inputs are co-graphs
// by construction. Returns the tree or the witness.
struct TreeOrWitness {
    std::optional<CanonicalCoExpr> tree;
    std::optional<PatternWitness> witness;
};

TreeOrWitness tree_of(InputDocument& doc) {
    if (doc.tree) return {doc.tree, std::nullopt};
    auto outcome = recognize(*doc.graph);
    if (outcome.accepted()) return {outcome.tree(), std::nullopt};
    return {std::nullopt, outcome.witness()};
}

}  // namespace

int cmd_recognize(const std::string& input, const RecognizeOpts& opts, std::ostream& out,
                  std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc = load_input(input);
        json j;
        j["command"] = "recognize";
        auto res = tree_of(doc);
        if (res.tree) {
            const std::string expr = serialize(res.tree->expr(), doc.names);
            if (opts.json) {
                j["verdict"] = "cograph";
                j["expression"] = expr;
                emit(out, j);
            } else {
                out << expr << '\n';
            }
            return 0;
        }
        if (opts.json) {
            j["verdict"] = "not-cograph";
            j["witness"] = witness_json(*res.witness, doc.names);
            emit(out, j);
        } else {
            out << "witness " << to_string(res.witness->pattern) << ": "
                << witness_names(*res.witness, doc.names) << '\n';
        }
        return 1;
    });
}

int cmd_color(const std::string& input, const ColorOpts& opts, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc = load_input(input);
        const OracleBudget budget = budget_of(opts.budget);
        auto res = tree_of(doc);
        json j;
        j["command"] = "color";
        if (!res.tree) {
            if (!opts.oracle) {
                err << "error: input is not an oriented co-graph (witness "
                    << to_string(res.witness->pattern) << ": "
                    << witness_names(*res.witness, doc.names)
                    << "); pass --oracle to compute the chromatic number by brute force\n";
                return 2;
            }
            const int chi = brute_chromatic(*doc.graph, budget);
            if (opts.json) {
                j["verdict"] = "not-cograph";
                j["witness"] = witness_json(*res.witness, doc.names);
                j["chi_o"] = chi;
                j["oracle"] = true;
                emit(out, j);
            } else {
                out << "chi_o = " << chi << " (oracle; not an oriented co-graph)\n";
            }
            return 0;
        }

        auto labeled = label_coloring(*res.tree);
        const int chi = labeled.coloring.k;
        bool ok = true;
        j["verdict"] = "cograph";
        j["chi_o"] = chi;
        if (!opts.json) out << "chi_o = " << chi << '\n';
        if (opts.assignment) {
            json assignment;
            for (Vertex v = 0; v < static_cast<Vertex>(labeled.coloring.color.size()); ++v) {
                if (opts.json) {
                    assignment[doc.names[v]] = labeled.coloring.color[v];
                } else {
                    out << doc.names[v] << ' ' << labeled.coloring.color[v] << '\n';
                }
            }
            if (opts.json) j["assignment"] = assignment;
        }
        if (opts.verify) {
            const bool valid = verify_oriented_coloring(doc.ensure_graph(), labeled.coloring);
            if (opts.json) {
                j["verified"] = valid;
            } else {
                out << "verify: " << (valid ? "ok" : "FAIL") << '\n';
            }
            ok = ok && valid;
        }
        if (opts.oracle) {
            const int oracle_chi = brute_chromatic(doc.ensure_graph(), budget);
            const bool agree = oracle_chi == chi;
            if (opts.json) {
                j["oracle_chi_o"] = oracle_chi;
                j["oracle_agrees"] = agree;
            } else {
                out << "oracle: chi_o = " << oracle_chi << ", agreement: " << (agree ? "yes" : "no")
                    << '\n';
            }
            ok = ok && agree;
        }
        if (opts.json) emit(out, j);
        return ok ? 0 : 1;
    });
}

int cmd_longest_path(const std::string& input, const LongestPathOpts& opts, std::ostream& out,
                     std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc = load_input(input);
        auto res = tree_of(doc);
        if (!res.tree) {
            err << "error: input is not an oriented co-graph (witness "
                << to_string(res.witness->pattern) << ": "
                << witness_names(*res.witness, doc.names) << ")\n";
            return 2;
        }
        const int len = longest_path_length(*res.tree);
        if (opts.json) {
            json j;
            j["command"] = "longest-path";
            j["length"] = len;
            emit(out, j);
        } else {
            out << "l = " << len << '\n';
        }
        return 0;
    });
}

int cmd_isomorphic(const std::string& first, const std::string& second,
                   const IsomorphicOpts& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc1 = load_input(first);
        InputDocument doc2 = load_input(second);
        auto res1 = tree_of(doc1);
        auto res2 = tree_of(doc2);
        for (const auto* r : {&res1, &res2})
            if (!r->tree) {
                err << "error: input is not an oriented co-graph (witness "
                    << to_string(r->witness->pattern) << ")\n";
                return 2;
            }
        const bool iso = cotree_isomorphic(*res1.tree, *res2.tree);
        if (opts.json) {
            json j;
            j["command"] = "isomorphic";
            j["isomorphic"] = iso;
            emit(out, j);
        } else {
            out << (iso ? "yes" : "no") << '\n';
        }
        return iso ? 0 : 1;
    });
}

int cmd_oriented_clique(const std::string& input, const CliqueOpts& opts, std::ostream& out,
                        std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc = load_input(input);
        auto res = tree_of(doc);
        if (!res.tree) {
            err << "error: input is not an oriented co-graph (witness "
                << to_string(res.witness->pattern) << ": "
                << witness_names(*res.witness, doc.names) << ")\n";
            return 2;
        }
        const bool clique = is_oriented_clique(*res.tree);
        if (opts.json) {
            json j;
            j["command"] = "oriented-clique";
            j["oriented_clique"] = clique;
            emit(out, j);
        } else {
            out << (clique ? "yes" : "no") << '\n';
        }
        return clique ? 0 : 1;
    });
}

int cmd_hom(const std::string& input, const HomOpts& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        InputDocument doc = load_input(input);
        const Digraph& g = doc.ensure_graph();
        auto h = hom_to_transitive_tournament(g, opts.k);
        json j;
        j["command"] = "hom";
        j["k"] = opts.k;
        j["exists"] = h.has_value();
        if (!h) {
            if (opts.json) {
                emit(out, j);
            } else {
                out << "none\n";
            }
            return 1;
        }
        if (opts.json) {
            json mapping;
            for (Vertex v = 0; v < g.vertex_count(); ++v) mapping[doc.names[v]] = (*h)[v];
            j["mapping"] = mapping;
            emit(out, j);
        } else {
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                out << doc.names[v] << ' ' << (*h)[v] << '\n';
        }
        return 0;
    });
}

int cmd_generate(const GenerateOpts& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto t = random_canonical(opts.n, opts.seed);
        json j;
        j["command"] = "generate";
        j["n"] = opts.n;
        j["seed"] = opts.seed;
        if (opts.edges) {
            NamedDigraph named{evaluate(t), default_names(opts.n)};
            if (opts.json) {
                std::ostringstream buf;
                write_edge_list(buf, named);
                j["edge_list"] = buf.str();
                emit(out, j);
            } else {
                write_edge_list(out, named);
            }
            return 0;
        }
        const std::string expr = serialize(t.expr());
        if (opts.json) {
            j["expression"] = expr;
            emit(out, j);
        } else {
            out << expr << '\n';
        }
        return 0;
    });
}

int cmd_check(const CheckOpts& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        CheckReport report = run_check(opts.params);
        if (opts.json) {
            json j;
            j["command"] = "check";
            j["n_max"] = opts.params.n_max;
            j["seed"] = opts.params.seed;
            j["trials"] = opts.params.trials;
            j["budget"] = opts.params.budget.max_vertices;
            j["all_pass"] = report.all_pass;
            j["results"] = json::array();
            for (const auto& r : report.results) {
                json item;
                item["name"] = r.name;
                item["pass"] = r.pass;
                item["cases"] = r.cases;
                if (!r.detail.empty()) item["detail"] = r.detail;
                j["results"].push_back(item);
            }
            emit(out, j);
        } else {
            for (const auto& r : report.results) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases
                    << " cases)";
                if (!r.detail.empty()) out << "  " << r.detail;
                out << '\n';
            }
            out << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
        }
        return report.all_pass ? 0 : 1;
    });
}

}  // namespace ocog
