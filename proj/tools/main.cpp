#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypo/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hyponormality of Toeplitz operators with radial-monomial symbols"};
    app.require_subcommand(1);

    hypo::cli::RunConfig cfg;
    bool json = false, csv = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json, "JSON output");
        return cmd;
    };

    cfg.args.resize(3);
    auto* project = app.add_subcommand("project", "Bergman projection of z^k zbar^j |z|^t");
    project->add_option("k", cfg.args[0])->required();
    project->add_option("j", cfg.args[1])->required();
    project->add_option("t", cfg.args[2])->required();

    auto* check = add_format(
        app.add_subcommand("check", "eigenvalue certificate search on truncations"));
    check->add_option("symbol", cfg.symbol_text)->required();
    check->add_option("--max-n", cfg.max_n, "largest truncation");
    check->add_option("--tol", cfg.tol, "negativity tolerance");

    auto* classify = add_format(app.add_subcommand("classify", "full theorem-family dispatch"));
    classify->add_option("symbol", cfg.symbol_text)->required();
    classify->add_option("--max-n", cfg.max_n, "largest truncation for the fallback search");
    classify->add_option("--budget", cfg.budget, "trial-family budget");

    auto* threshold = add_format(
        app.add_subcommand("threshold", "necessary/sufficient bounds for z^n + C|z|^s"));
    threshold->add_option("--n", cfg.n)->required();
    threshold->add_option("--s", cfg.s)->required();
    threshold->add_option("--pencil-size", cfg.pencil_size);

    auto* annuli = app.add_subcommand("annuli", "excluded |a| region for z^n|z|^s + a z^m|z|^t");
    annuli->add_option("--m", cfg.m)->required();
    annuli->add_option("--n", cfg.n)->required();
    annuli->add_option("--s", cfg.s)->required();
    annuli->add_option("--t", cfg.t)->required();
    annuli->add_option("--budget", cfg.budget);
    annuli->add_option("--csv", cfg.output_path, "write rows to this file");
    annuli->add_flag("--csv-stdout", csv, "CSV rows on stdout");

    auto* algebraic = add_format(
        app.add_subcommand("algebraic", "z^m sum of |z| powers, exact polynomial test"));
    algebraic->add_option("--m", cfg.m)->required();
    algebraic->add_option("--powers", cfg.powers, "s0,s1,...")->required();
    algebraic->add_option("--coeffs", cfg.coeffs, "a1,a2,...");

    auto* scan = app.add_subcommand("scan", "classify over a grid of the parameter a");
    scan->add_option("template", cfg.symbol_text, "symbol with parameter token a")->required();
    scan->add_option("--re-range", cfg.re_range, "lo:hi")->required();
    scan->add_option("--im-range", cfg.im_range, "lo:hi")->required();
    scan->add_option("--step", cfg.step)->required();
    scan->add_option("--csv", cfg.output_path, "write rows to this file");
    scan->add_option("--max-n", cfg.max_n);
    scan->add_option("--budget", cfg.budget);

    auto* oracle = app.add_subcommand("oracle", "brute-force quadrature/Gram checks");
    oracle->add_option("args", cfg.args, "inner a b s c d t | gram u0,u1,...")
        ->expected(-1);
    oracle->add_option("--symbol", cfg.symbol_text, "symbol for gram");

    app.add_subcommand("reproduce", "re-derive the published numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (json) cfg.format = hypo::cli::Format::Json;
    if (csv) cfg.format = hypo::cli::Format::Csv;
    if (cfg.command == "project") {
        // positionals were bound before parse; drop empties left by CLI11
        while (!cfg.args.empty() && cfg.args.back().empty()) cfg.args.pop_back();
    }
    if (cfg.command == "oracle" && !cfg.args.empty() && cfg.args[0] == "gram" &&
        cfg.args.size() == 2 && cfg.symbol_text.empty()) {
        std::cerr << "oracle gram needs --symbol\n";
        return 1;
    }
    return hypo::cli::run(cfg, std::cout);
}
