#include "forchfem/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "forchfem/analysis.hpp"
#include "forchfem/cases.hpp"
#include "forchfem/errors.hpp"
#include "forchfem/law_properties.hpp"
#include "forchfem/solver.hpp"

namespace forchfem {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Consistency gate run before any solve of a manufactured case.
void gate_case(const ManufacturedCase& problem, std::ostream& log) {
    if (!problem.has_exact) return;
    const CaseCheck check = check_case_consistency(problem);
    if (!check.pass())
        throw SolverError("case '" + problem.name + "' failed the consistency oracle: " +
                          "pde residual " + fmt("%.3e", check.max_pde_residual) +
                          ", boundary defect " + fmt("%.3e", check.max_boundary_defect));
    log << "# case " << problem.name << " consistency: pde residual "
        << fmt("%.3e", check.max_pde_residual) << ", boundary defect "
        << fmt("%.3e", check.max_boundary_defect) << "\n";
}

struct OutputStream {
    std::ofstream file;
    std::ostream* stream;

    explicit OutputStream(const std::string& path) {
        if (path.empty()) {
            stream = &std::cout;
        } else {
            file.open(path);
            if (!file) throw ConfigError("output", "cannot open '" + path + "' for writing");
            stream = &file;
        }
    }
};

RunReport run_one(const RunConfiguration& config, const ManufacturedCase& problem, int n) {
    const FESpace space = build_space(unit_square_mesh(n), config.order);
    return run_simulation(space, config.law(), problem, config.solver_config(n));
}

void write_solve_report(std::ostream& out, const RunConfiguration& config,
                        const ManufacturedCase& problem, const FESpace& space,
                        const RunReport& report) {
    out << "case: " << problem.name << "\n";
    out << "order: " << config.order << "\n";
    out << "N: " << space.mesh().subdivisions() << "\n";
    out << "h: " << fmt("%.6e", space.mesh().max_diameter()) << "\n";
    out << "dt: " << fmt("%.6e", report.dt) << "\n";
    out << "steps: " << report.steps.size() << "\n";
    out << "max_nonlinear_iterations: " << report.max_iterations() << "\n";
    out << "initial_l2_norm: " << fmt("%.6e", report.initial_l2) << "\n";
    out << "max_mass_balance_defect: " << fmt("%.6e", report.max_mass_defect()) << "\n";

    if (problem.has_exact) {
        const ErrorRecord err = error_at_final_time(
            report, problem, config.q_list.empty() ? 0.0 : config.q_list.front());
        out << "l2_error: " << fmt("%.6e", err.l2_error) << "\n";
        out << "grad_lbeta_error: " << fmt("%.6e", err.grad_lbeta_error) << "\n";
        if (err.lq_error)
            out << "l" << err.extra_q << "_error: " << fmt("%.6e", *err.lq_error) << "\n";
    }

    const char sep = config.format == OutputFormat::csv ? ',' : '\t';
    out << "\nstep" << sep << "t" << sep << "iterations" << sep << "l2_norm" << sep
        << "grad_lbeta_norm" << sep << "mass_defect";
    for (double q : config.q_list) out << sep << "l" << q << "_norm";
    out << "\n";
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const StepRecord& s = report.steps[i];
        out << (i + 1) << sep << fmt("%.6e", s.time) << sep << s.iterations << sep
            << fmt("%.6e", s.l2_norm) << sep << fmt("%.6e", s.grad_lbeta_norm) << sep
            << fmt("%.6e", s.mass_defect);
        for (double qn : s.q_norms) out << sep << fmt("%.6e", qn);
        out << "\n";
    }
}

}  // namespace

int cmd_solve(const RunConfiguration& config, std::ostream& log,
              const std::string& mesh_dump_path) {
    if (config.mesh_sizes.size() != 1)
        throw ConfigError("mesh_sizes", "solve expects exactly one mesh size");
    const int n = config.mesh_sizes.front();

    const ManufacturedCase problem = case_by_name(config.case_name, config.law());
    gate_case(problem, log);

    const FESpace space = build_space(unit_square_mesh(n), config.order);
    if (!mesh_dump_path.empty()) {
        std::ofstream dump(mesh_dump_path);
        if (!dump) throw ConfigError("mesh_dump", "cannot open '" + mesh_dump_path + "'");
        space.mesh().write_text(dump);
    }

    const RunReport report = run_simulation(space, config.law(), problem,
                                            config.solver_config(n));

    OutputStream out(config.output_path);
    write_solve_report(*out.stream, config, problem, space, report);
    return kExitOk;
}

int cmd_converge(const RunConfiguration& config, std::ostream& log) {
    if (config.mesh_sizes.size() > 1)
        for (std::size_t i = 1; i < config.mesh_sizes.size(); ++i)
            if (config.mesh_sizes[i] != 2 * config.mesh_sizes[i - 1])
                throw ConfigError("mesh_sizes", "must double between entries for a rate study");

    const ManufacturedCase problem = case_by_name(config.case_name, config.law());
    if (!problem.has_exact)
        throw ConfigError("case", "convergence study requires a case with an exact solution");
    gate_case(problem, log);

    std::vector<ErrorRecord> rows;
    for (int n : config.mesh_sizes) {
        const RunReport report = run_one(config, problem, n);
        rows.push_back(error_at_final_time(report, problem));
        log << "# N=" << n << " done: l2_error " << fmt("%.6e", rows.back().l2_error) << "\n";
    }

    const ConvergenceTable table = convergence_rates(std::move(rows));
    OutputStream out(config.output_path);
    if (config.format == OutputFormat::csv)
        write_csv(*out.stream, table);
    else
        write_markdown(*out.stream, table);
    return kExitOk;
}

int cmd_verify(const GeneralizedPolynomial& law, std::uint64_t seed, std::ostream& log) {
    const std::vector<PropertyResult> results = law_property_suite(law, seed);
    bool ok = true;
    for (const auto& r : results) {
        log << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        ok = ok && r.pass;
    }
    return ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace forchfem
