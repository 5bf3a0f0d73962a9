#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "forchfem/cases.hpp"
#include "forchfem/fespace.hpp"
#include "forchfem/solver.hpp"

namespace forchfem {

// L^q norm of a finite element field by element-wise quadrature of degree
// 2r+2. q may be infinity, approximated as the max over nodal points plus
// quadrature points. Throws std::invalid_argument for q < 1.
double lq_norm(const DensityField& field, double q);

// L^q norm of field - exact.
double lq_error_norm(const DensityField& field, const std::function<double(Vec2)>& exact,
                     double q);

// (integral |grad .|^beta)^{1/beta} by the same quadrature.
double grad_lbeta_norm(const DensityField& field, double beta);
double grad_lbeta_error_norm(const DensityField& field,
                             const std::function<Vec2(Vec2)>& exact_gradient, double beta);

// Overloads with an explicit quadrature degree (used by the quadrature
// consistency checks).
double lq_norm(const DensityField& field, double q, int quadrature_degree);
double grad_lbeta_norm(const DensityField& field, double beta, int quadrature_degree);

struct ErrorRecord {
    int n = 0;            // mesh subdivisions
    double h = 0.0;       // max element diameter
    double dt = 0.0;
    double l2_error = 0.0;
    double grad_lbeta_error = 0.0;
    std::optional<double> lq_error;  // for extra_q, when requested
    double extra_q = 0.0;
    std::optional<double> linf_error;
};

// Errors of the final-time field against the analytic solution, measured by
// quadrature against the exact solution evaluated pointwise. extra_q > 0 adds
// an L^q column; include_linf samples nodes plus quadrature points.
ErrorRecord error_at_final_time(const RunReport& report, const ManufacturedCase& problem,
                                double extra_q = 0.0, bool include_linf = false);

struct ConvergenceTable {
    std::vector<ErrorRecord> rows;
    std::vector<std::optional<double>> l2_rates;          // rows.size()-1 entries
    std::vector<std::optional<double>> grad_lbeta_rates;
};

// Per-doubling rates log2(e_prev / e_curr). Requires rows sorted by N with
// each N double the previous; non-positive errors yield blank rates.
ConvergenceTable convergence_rates(std::vector<ErrorRecord> rows);

// CSV with the fixed header
// "N,h,dt,l2_error,l2_rate,grad_lbeta_error,grad_lbeta_rate".
void write_csv(std::ostream& out, const ConvergenceTable& table);

// Markdown table with the same columns.
void write_markdown(std::ostream& out, const ConvergenceTable& table);

}  // namespace forchfem
