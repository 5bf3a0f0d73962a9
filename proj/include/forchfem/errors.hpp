#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace forchfem {

// Failure of an iterative numerical procedure (root finding, quadrature,
// linear solve). Distinct from std::invalid_argument, which is reserved for
// precondition violations.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Nonlinear iteration exhausted its iteration budget. Carries the last
// iterate and residual so callers can inspect or restart.
class NonlinearSolveError : public SolverError {
public:
    NonlinearSolveError(const std::string& what, std::vector<double> last_iterate,
                        double residual_norm, int step_index = -1)
        : SolverError(what),
          last_iterate(std::move(last_iterate)),
          residual_norm(residual_norm),
          step_index(step_index) {}

    std::vector<double> last_iterate;
    double residual_norm = 0.0;
    int step_index = -1;  // time-step index when thrown from a run, else -1
};

// Invalid run configuration; `field` names the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field(std::move(field)) {}

    std::string field;
};

}  // namespace forchfem
