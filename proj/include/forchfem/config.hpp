#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forchfem/law.hpp"
#include "forchfem/solver.hpp"

namespace forchfem {

enum class DtPolicy { tied_to_n, fixed };
enum class OutputFormat { csv, markdown };

// Experiment description loaded from a JSON configuration file. Validation
// failures throw ConfigError naming the offending field.
struct RunConfiguration {
    std::vector<std::pair<double, double>> law_terms;  // (exponent, coefficient)
    std::string case_name;
    int order = 2;
    std::vector<int> mesh_sizes;
    DtPolicy dt_policy = DtPolicy::tied_to_n;
    double dt = 0.0;  // required when dt_policy == fixed
    double final_time = 1.0;
    double nonlinear_tol = 1e-6;
    int max_nonlinear_iters = 50;
    double linear_tol = 1e-12;
    Linearization linearization = Linearization::picard;
    double damping = 1.0;
    std::vector<double> q_list;
    std::string output_path;  // empty: stdout
    OutputFormat format = OutputFormat::csv;

    GeneralizedPolynomial law() const;
    SolverConfig solver_config(int mesh_n) const;  // applies the dt policy
};

// Parse + validate from JSON text. `parse_run_configuration` takes the raw
// document; `load_run_configuration` reads a file.
RunConfiguration parse_run_configuration(const std::string& json_text);
RunConfiguration load_run_configuration(const std::string& path);

// Reads only the "law" field of a configuration file (two-term default when
// absent); used by the property-suite subcommand.
GeneralizedPolynomial load_law(const std::string& path);

}  // namespace forchfem
