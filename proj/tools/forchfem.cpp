// Command-line front end: single runs, convergence studies and the law
// property suite.
//
// Exit codes: 0 success, 1 property failure, 2 configuration error,
// 3 solver non-convergence.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "forchfem/cli.hpp"
#include "forchfem/errors.hpp"

namespace {

forchfem::RunConfiguration load(const std::string& path, const std::string& output_override,
                                const std::string& format_override) {
    forchfem::RunConfiguration config = forchfem::load_run_configuration(path);
    if (!output_override.empty()) config.output_path = output_override;
    if (!format_override.empty()) {
        if (format_override == "csv")
            config.format = forchfem::OutputFormat::csv;
        else if (format_override == "markdown")
            config.format = forchfem::OutputFormat::markdown;
        else
            throw forchfem::ConfigError("format", "must be \"csv\" or \"markdown\"");
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite element solver for degenerate Forchheimer flow on the unit square"};
    app.require_subcommand(1);

    std::string config_path, output_path, format, mesh_dump, verify_config;
    std::uint64_t seed = 1;

    CLI::App* solve = app.add_subcommand("solve", "run a single mesh and report monitors");
    solve->add_option("--config", config_path, "JSON configuration file")->required();
    solve->add_option("--output", output_path, "output file (default: config or stdout)");
    solve->add_option("--format", format, "csv|markdown");
    solve->add_option("--dump-mesh", mesh_dump, "write the mesh as plain text");

    CLI::App* converge = app.add_subcommand("converge", "convergence study over mesh sizes");
    converge->add_option("--config", config_path, "JSON configuration file")->required();
    converge->add_option("--output", output_path, "output file (default: config or stdout)");
    converge->add_option("--format", format, "csv|markdown");

    CLI::App* verify = app.add_subcommand("verify", "run the law property suite");
    verify->add_option("--config", verify_config,
                       "JSON configuration supplying the law (default: two-term)");
    verify->add_option("--seed", seed, "seed for property sampling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return forchfem::cmd_solve(load(config_path, output_path, format), std::cerr,
                                       mesh_dump);
        if (converge->parsed())
            return forchfem::cmd_converge(load(config_path, output_path, format), std::cerr);
        if (verify->parsed()) {
            const forchfem::GeneralizedPolynomial law =
                verify_config.empty() ? forchfem::GeneralizedPolynomial::two_term()
                                      : forchfem::load_law(verify_config);
            return forchfem::cmd_verify(law, seed, std::cout);
        }
    } catch (const forchfem::ConfigError& err) {
        std::cerr << "configuration error: " << err.what() << "\n";
        return forchfem::kExitConfigError;
    } catch (const forchfem::NonlinearSolveError& err) {
        std::cerr << "solver failure";
        if (err.step_index >= 0) std::cerr << " at step " << err.step_index;
        std::cerr << ": " << err.what() << " (residual " << err.residual_norm << ")\n";
        return forchfem::kExitSolverFailure;
    } catch (const forchfem::SolverError& err) {
        std::cerr << "solver failure: " << err.what() << "\n";
        return forchfem::kExitSolverFailure;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return forchfem::kExitConfigError;
    }
    return forchfem::kExitOk;
}
