#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rydline/app.hpp"
#include "rydline/config.hpp"

namespace {

void trim(std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    s = first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

// Each --values occurrence may carry a comma-separated list of axis tokens.
std::vector<std::string> split_values(const std::vector<std::string>& chunks) {
    std::vector<std::string> out;
    for (const auto& chunk : chunks) {
        std::string::size_type start = 0;
        while (start <= chunk.size()) {
            const auto comma = chunk.find(',', start);
            std::string token = comma == std::string::npos ? chunk.substr(start)
                                                           : chunk.substr(start, comma - start);
            trim(token);
            if (!token.empty()) out.push_back(token);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Rydberg atom to transmission-line resonator coupling: design tables,"
                 " decoherence budgets, parameter sweeps, and cavity-QED simulation"};
    cli.set_version_flag("--version", std::string("rydline ") + rydline::app::kVersion);

    bool constants_flag = false;
    cli.add_flag("--constants", constants_flag,
                 "print the physical constant set (17 digits) and exit");

    std::string config_path;
    std::vector<std::string> sets;
    std::string output_override;
    std::string format_override;
    std::string axis;
    std::vector<std::string> value_chunks;
    bool strict = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file")->type_size(1);
        sub->add_option("--set", sets, "override one field, dotted.path=value")->type_size(1);
        sub->add_option("--output", output_override, "output file, '-' for stdout")->type_size(1);
        sub->add_option("--format", format_override, "csv or json")
            ->type_size(1)
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--strict", strict, "fail (exit 3) on model-validity warnings");
    };

    CLI::App* estimate = cli.add_subcommand("estimate", "single-point design table");
    CLI::App* budget = cli.add_subcommand("budget", "decoherence and Q budget report");
    CLI::App* sweep = cli.add_subcommand("sweep", "estimate+budget table along one axis");
    CLI::App* simulate = cli.add_subcommand("simulate", "cavity-QED time series");
    for (CLI::App* sub : {estimate, budget, sweep, simulate}) add_common(sub);
    sweep->add_option("--axis", axis, "configuration field to vary")->required()->type_size(1);
    sweep->add_option("--values", value_chunks, "axis values, comma separated or repeated")
        ->required()
        ->type_size(1);
    cli.require_subcommand(0, 1);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (constants_flag) {
        rydline::app::print_constants(std::cout);
        return 0;
    }
    if (!estimate->parsed() && !budget->parsed() && !sweep->parsed() && !simulate->parsed()) {
        std::cerr << cli.help();
        return 2;
    }

    try {
        rydline::app::RunConfig config = config_path.empty()
                                             ? rydline::app::RunConfig()
                                             : rydline::app::load_config_file(config_path);
        for (const auto& assignment : sets) rydline::app::apply_override(config, assignment);
        if (!format_override.empty()) config.format = format_override;
        if (!output_override.empty()) config.output_path = output_override;

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (config.output_path != "-") {
            file.open(config.output_path, std::ios::binary);
            if (!file) {
                throw rydline::app::ConfigError("cannot open output file '" +
                                                config.output_path + "'");
            }
            out = &file;
        }

        if (estimate->parsed()) {
            return rydline::app::cmd_estimate(config, *out, std::cerr, strict);
        }
        if (budget->parsed()) {
            return rydline::app::cmd_budget(config, *out, std::cerr, strict);
        }
        if (sweep->parsed()) {
            return rydline::app::cmd_sweep(config, axis, split_values(value_chunks), *out,
                                           std::cerr, strict);
        }
        return rydline::app::cmd_simulate(config, *out, std::cerr, strict);
    } catch (const rydline::app::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
