// braidstab: braids, entropy bounds and Hofer-stability experiments for
// periodic orbits of time-periodic Hamiltonian flows on the disk and torus.

#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "braidstab/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"braid stability toolkit"};
    app.require_subcommand(1);

    braidstab::RunOptions opt;
    std::string format = "both";
    if (const char* env = std::getenv("BRAIDSTAB_THREADS")) opt.threads = std::atoi(env);
    if (opt.threads < 1) opt.threads = 1;

    const std::vector<std::string> commands = {"orbits", "braid",      "entropy",
                                               "stability", "gf2-corpus", "symbolic-check"};
    std::string chosen;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--scenario", opt.scenario_path, "scenario JSON file")->required();
        sub->add_option("--out", opt.out_dir, "output directory")->required();
        CLI::Option* seed_opt =
            sub->add_option("--seed", opt.seed, "random seed for randomized corpora");
        sub->add_option("--threads", opt.threads, "worker threads for grid searches");
        sub->add_option("--format", format, "artifact format")
            ->check(CLI::IsMember({"csv", "json", "both"}));
        sub->callback([&chosen, name, seed_opt, &opt]() {
            chosen = name;
            opt.seed_from_cli = seed_opt->count() > 0;
        });
    }

    CLI11_PARSE(app, argc, argv);

    if (format == "csv") opt.format = braidstab::ReportFormat::Csv;
    else if (format == "json") opt.format = braidstab::ReportFormat::Json;
    else opt.format = braidstab::ReportFormat::Both;

    return braidstab::run_command(chosen, opt);
}
