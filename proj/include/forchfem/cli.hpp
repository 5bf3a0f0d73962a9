#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "forchfem/config.hpp"

namespace forchfem {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

// Single run on one mesh: writes a run report (per-step monitors, iteration
// counts, errors when the case has an exact solution).
int cmd_solve(const RunConfiguration& config, std::ostream& log,
              const std::string& mesh_dump_path = "");

// Convergence study over doubling mesh sizes: writes the CSV or markdown
// rate table.
int cmd_converge(const RunConfiguration& config, std::ostream& log);

// Law property suite; prints one pass/fail line per property.
int cmd_verify(const GeneralizedPolynomial& law, std::uint64_t seed, std::ostream& log);

}  // namespace forchfem
