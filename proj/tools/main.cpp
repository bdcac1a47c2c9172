#include <algorithm>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "cli.hpp"

using tcover::cli::GensMode;
using tcover::cli::RunConfig;

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    try {
        tcover::cli::apply_env_caps(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return tcover::cli::kUsage;
    }

    CLI::App app{"t-cover ideals: generators, symbolic powers, packing and LP duality"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();

    std::size_t gen_cap = cfg.generator_cap;
    std::uint64_t alpha_cap = cfg.alpha_cap;
    app.add_option("--output,-o", cfg.output, "Write JSON here instead of stdout");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--pretty", cfg.pretty, "Print a table instead of JSON");
    app.add_option("--cap", gen_cap, "Generator cap for symbolic powers")->check(CLI::PositiveNumber);
    app.add_option("--alpha-cap", alpha_cap, "Cap on weight vectors scanned by gap-search")
        ->check(CLI::PositiveNumber);

    auto graph_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--graph,-g", cfg.graph, "graph6 | path:n | cycle:n | star:n | complete:n | file:PATH")
            ->required();
        sub->add_option("--t,-t", cfg.t, "Connectivity size t")->required();
        return sub;
    };

    auto* gens = graph_cmd("gens", "Minimal generators of J_t(G)");
    bool closed = false, brute = false, check = false;
    auto* closed_flag = gens->add_flag("--closed-form", closed, "Use the path/cycle formula");
    auto* brute_flag = gens->add_flag("--brute-force", brute, "Enumerate minimal transversals (default)");
    auto* check_flag = gens->add_flag("--check", check, "Compare both; exit 1 on mismatch");
    closed_flag->excludes(brute_flag)->excludes(check_flag);
    brute_flag->excludes(check_flag);

    auto* simis = graph_cmd("simis", "Compare symbolic and ordinary powers up to --smax");
    simis->add_option("--smax", cfg.s_max, "Largest power (default t)")->check(CLI::PositiveNumber);

    graph_cmd("konig", "König test for J_t(G)");
    graph_cmd("packing", "Scan every minor of J_t(G)");

    auto* lp = graph_cmd("lp", "tau and nu for a weight vector");
    lp->add_option("--alpha", cfg.alpha, "Comma-separated weights, one per vertex (default all ones)");

    auto* gap = graph_cmd("gap-search", "Search weight vectors with tau != nu");
    gap->add_option("--bound", cfg.entry_bound, "Largest weight entry");

    auto* verify = app.add_subcommand("verify-theorem", "Compare predicted and computed packing over many graphs");
    verify->add_option("--n-max", cfg.n_max, "All connected labeled graphs up to this order");
    verify->add_option("--t-min", cfg.t_min);
    verify->add_option("--t-max", cfg.t_max, "0 means n");
    verify->add_option("--smax", cfg.s_max, "0 means t");
    verify->add_option("--family-n-max", cfg.family_n_max, "Paths and cycles beyond n-max up to this order");
    verify->add_option("--family-t-max", cfg.family_t_max, "0 means n");
    bool no_dedup = false;
    verify->add_flag("--no-dedup", no_dedup, "Evaluate every labeled graph separately");

    auto* report = app.add_subcommand("report", "Validate a harness report and re-emit it");
    report->add_option("--input,-i", cfg.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : tcover::cli::kUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (app.count("--cap") > 0) cfg.generator_cap = gen_cap;
    if (app.count("--alpha-cap") > 0) cfg.alpha_cap = alpha_cap;
    cfg.dedup = !no_dedup;
    if (closed) cfg.gens_mode = GensMode::ClosedForm;
    if (check) cfg.gens_mode = GensMode::Check;

    return tcover::cli::run(cfg, std::cout, std::cerr);
}
