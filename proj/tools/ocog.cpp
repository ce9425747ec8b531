#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ocog/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"oriented co-graph toolkit: recognition, oriented coloring, longest"
                 " oriented paths and isomorphism on transitive series-parallel digraphs"};
    app.require_subcommand(1);

    std::string input, second;

    auto* rec = app.add_subcommand("recognize",
                                   "decompose a digraph into a canonical expression or report a"
                                   " forbidden pattern");
    ocog::RecognizeOpts rec_opts;
    rec->add_option("input", input, "edge-list/expression file or inline expression")->required();
    rec->add_flag("--json", rec_opts.json, "machine-readable output");

    auto* col = app.add_subcommand("color", "optimal oriented coloring and chromatic number");
    ocog::ColorOpts col_opts;
    col->add_option("input", input, "edge-list/expression file or inline expression")->required();
    col->add_flag("--assignment", col_opts.assignment, "print one 'name color' line per vertex");
    col->add_flag("--verify", col_opts.verify, "re-check the coloring against the digraph");
    col->add_flag("--oracle", col_opts.oracle, "cross-check with the brute-force oracle");
    col->add_option("--budget", col_opts.budget, "oracle vertex budget")->capture_default_str();
    col->add_flag("--json", col_opts.json, "machine-readable output");

    auto* lp = app.add_subcommand("longest-path", "number of arcs on a longest oriented path");
    ocog::LongestPathOpts lp_opts;
    lp->add_option("input", input, "edge-list/expression file or inline expression")->required();
    lp->add_flag("--json", lp_opts.json, "machine-readable output");

    auto* iso = app.add_subcommand("isomorphic", "decide isomorphism of two oriented co-graphs");
    ocog::IsomorphicOpts iso_opts;
    iso->add_option("first", input, "first input")->required();
    iso->add_option("second", second, "second input")->required();
    iso->add_flag("--json", iso_opts.json, "machine-readable output");

    auto* clique = app.add_subcommand("oriented-clique",
                                      "decide whether the input is an oriented clique");
    ocog::CliqueOpts clique_opts;
    clique->add_option("input", input, "edge-list/expression file or inline expression")
        ->required();
    clique->add_flag("--json", clique_opts.json, "machine-readable output");

    auto* hom = app.add_subcommand("hom",
                                   "homomorphism into the transitive tournament on k vertices");
    ocog::HomOpts hom_opts;
    hom->add_option("input", input, "edge-list/expression file or inline expression")->required();
    hom->add_option("-k,--k", hom_opts.k, "tournament size")->required();
    hom->add_flag("--json", hom_opts.json, "machine-readable output");

    auto* gen = app.add_subcommand("generate", "random canonical expression on n vertices");
    ocog::GenerateOpts gen_opts;
    gen->add_option("n", gen_opts.n, "number of vertices")->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_opts.seed, "RNG seed")->capture_default_str();
    gen->add_flag("--edges", gen_opts.edges, "emit the evaluated edge list");
    gen->add_flag("--json", gen_opts.json, "machine-readable output");

    auto* chk = app.add_subcommand("check", "run the cross-validation property suite");
    ocog::CheckOpts chk_opts;
    chk->add_option("--n-max", chk_opts.params.n_max, "max vertices / tree leaves")
        ->capture_default_str();
    chk->add_option("--seed", chk_opts.params.seed, "base RNG seed")->capture_default_str();
    chk->add_option("--trials", chk_opts.params.trials, "random cases per property")
        ->capture_default_str();
    chk->add_option("--budget", chk_opts.params.budget.max_vertices, "oracle vertex budget")
        ->capture_default_str();
    chk->add_flag("--json", chk_opts.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (rec->parsed()) return ocog::cmd_recognize(input, rec_opts, std::cout, std::cerr);
    if (col->parsed()) return ocog::cmd_color(input, col_opts, std::cout, std::cerr);
    if (lp->parsed()) return ocog::cmd_longest_path(input, lp_opts, std::cout, std::cerr);
    if (iso->parsed()) return ocog::cmd_isomorphic(input, second, iso_opts, std::cout, std::cerr);
    if (clique->parsed())
        return ocog::cmd_oriented_clique(input, clique_opts, std::cout, std::cerr);
    if (hom->parsed()) return ocog::cmd_hom(input, hom_opts, std::cout, std::cerr);
    if (gen->parsed()) return ocog::cmd_generate(gen_opts, std::cout, std::cerr);
    if (chk->parsed()) return ocog::cmd_check(chk_opts, std::cout, std::cerr);
    return 2;
}
