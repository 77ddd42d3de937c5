#include <CLI11.hpp>

#include <iostream>

#include "pbu/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Mod-2 homology and spanning checks for Borsuk-Ulam type problems"};
    app.set_version_flag("--version", pbu::cli::version);
    app.require_subcommand(1);

    pbu::cli::RunConfig cfg;
    int res = 0;
    double eps = 0;
    unsigned seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "input JSON file; omitted uses a built-in example");
        sub->add_option("--out", cfg.out, "report path; artifacts are written next to it");
        sub->add_option("--res", res, "grid or subdivision resolution")->check(CLI::PositiveNumber);
        sub->add_option("--eps", eps, "matching tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", seed, "seed for random inputs");
        sub->add_option("--feature", cfg.feature, "optional feature (n2: directions on S^2)");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"homology", "relative Betti numbers and representatives"},
        {"essential", "H-essentiality of a simplicial map of pairs"},
        {"symsquare", "symmetric square of a class"},
        {"bu-solve", "solve and certify a sampled parametrized family"},
        {"chords", "chords with matching boundary values in a planar region"},
        {"corr", "correspondence constructions and empirical spanning"},
    };
    for (const auto& [name, help] : commands)
        add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pbu::cli::parse_error;
    }
    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        if (sub->count("--res"))
            cfg.res = res;
        if (sub->count("--eps"))
            cfg.eps = eps;
        if (sub->count("--seed"))
            cfg.seed = seed;
    }
    return pbu::cli::run(cfg);
}
