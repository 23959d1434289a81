#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cauchy/cli/commands.hpp"
#include "cauchy/cli/run_config.hpp"

namespace {

// Remaining arguments must come as "--key value" or "--key=value" pairs.
std::vector<cauchy::cli::Override> collect_overrides(const std::vector<std::string>& extras) {
    std::vector<cauchy::cli::Override> out;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0 || tok.size() <= 2) {
            throw cauchy::cli::ConfigError("unexpected argument '" + tok + "'");
        }
        const std::string body = tok.substr(2);
        if (const auto eq = body.find('='); eq != std::string::npos) {
            out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        if (i + 1 >= extras.size()) {
            throw cauchy::cli::ConfigError("override '" + tok + "' has no value");
        }
        out.emplace_back(body, extras[++i]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cauchy data completion for the Laplace equation by an iterative space-marching observer"};
    app.require_subcommand(1);

    std::string solve_config;
    auto* solve = app.add_subcommand("solve", "run the observer and write boundary/history/gain CSVs");
    solve->add_option("--config", solve_config, "key = value configuration file")->required();
    solve->allow_extras();

    std::string diag_config;
    auto* diagnose = app.add_subcommand("diagnose", "write spectral and observability diagnostics");
    diagnose->add_option("--config", diag_config, "key = value configuration file")->required();
    diagnose->allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cauchy::cli::kExitUsage;
    }

    try {
        if (solve->parsed()) {
            const auto cfg = cauchy::cli::load_config(solve_config, collect_overrides(solve->remaining()));
            return cauchy::cli::cmd_solve(cfg, std::cout, std::cerr);
        }
        const auto cfg = cauchy::cli::load_config(diag_config, collect_overrides(diagnose->remaining()));
        return cauchy::cli::cmd_diagnose(cfg, std::cout, std::cerr);
    } catch (const cauchy::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cauchy::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cauchy::cli::kExitRuntime;
    }
}
