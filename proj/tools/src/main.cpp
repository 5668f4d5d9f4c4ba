// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"operator-algebra proof suites and arrival-time experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "chronop_out";
    std::uint64_t seed = 12345;

    const std::pair<const char*, const char*> commands[] = {
        {"verify-algebra", "run the operator-identity proof suite"},
        {"evolve", "evolve a packet and export snapshots"},
        {"arrival", "compare all mean-time estimators on one scenario"},
        {"pauli-shift", "energy-translation and zero-reference experiments"},
        {"em-moment", "4D angular-momentum and electromagnetic-moment tensors"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "experiment definition file")
            ->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "seed for randomized property sweeps");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    return chronop::cli::run_command(command, config_path, out_dir, seed, std::cerr);
}
