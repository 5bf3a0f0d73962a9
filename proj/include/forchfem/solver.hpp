#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "forchfem/assembly.hpp"
#include "forchfem/cases.hpp"
#include "forchfem/errors.hpp"
#include "forchfem/fespace.hpp"
#include "forchfem/law.hpp"
#include "forchfem/sparse.hpp"

namespace forchfem {

enum class Linearization { picard, newton };

struct SolverConfig {
    double dt = 0.1;
    double final_time = 1.0;
    double nonlinear_tol = 1e-6;
    int max_nonlinear_iters = 50;
    double linear_tol = 1e-12;
    Linearization linearization = Linearization::picard;
    double damping = 1.0;                  // in (0, 1]
    std::vector<double> monitor_q;         // extra L^q norms recorded per step

    void validate() const;  // throws ConfigError
};

// Conjugate gradients with diagonal (Jacobi) preconditioning for SPD
// systems; stops at relative residual <= tol, iteration cap 10 * dim.
std::vector<double> linear_solve(const SparseMatrix& a, std::span<const double> b,
                                 double tol, const std::vector<double>* initial = nullptr);

// Per-step diagnostics collected during a run.
struct StepRecord {
    double time = 0.0;
    int iterations = 0;
    int damping_retries = 0;
    double update_norm = 0.0;    // | c^{k+1} - c^k |_2 at acceptance
    double residual_norm = 0.0;  // algebraic residual of the nonlinear system
    double mass_defect = 0.0;    // | (rho^n - rho^{n-1}, 1)/dt + <psi,1> - (f,1) |
    double l2_norm = 0.0;
    double grad_lbeta_norm = 0.0;
    std::vector<double> q_norms;
};

struct RunReport {
    double dt = 0.0;
    double final_time = 0.0;
    double initial_l2 = 0.0;
    std::vector<StepRecord> steps;
    DensityField final_field;

    int max_iterations() const;
    double max_l2_norm() const;
    double max_mass_defect() const;
};

// One backward Euler step: solves, for every basis function w_h,
//   (rho^n - rho^{n-1}, w_h)/dt + (K(|grad rho^n|) grad rho^n, grad w_h)
//     + <psi^n, w_h> - (f^n, w_h) = 0
// by Picard (frozen-kernel) or Newton iteration. Stops when both the
// successive-iterate norm and the algebraic residual norm fall below
// nonlinear_tol; a growing iterate difference triggers an automatic retry
// with halved damping. Throws NonlinearSolveError past the iteration cap.
struct StepResult {
    DensityField field;
    StepRecord record;
};

StepResult backward_euler_step_detailed(const FESpace& space, const GeneralizedPolynomial& law,
                                        const DensityField& prev, double t_next,
                                        const SolverConfig& config,
                                        const std::function<double(Vec2, double)>& f,
                                        const std::function<double(Vec2, double)>& psi);

DensityField backward_euler_step(const FESpace& space, const GeneralizedPolynomial& law,
                                 const DensityField& prev, double t_next,
                                 const SolverConfig& config,
                                 const std::function<double(Vec2, double)>& f,
                                 const std::function<double(Vec2, double)>& psi);

// Time loop from t=0 to final_time with dt adjusted to divide final_time
// exactly; the initial field is the L2-projection of the case initial data.
RunReport run_simulation(const FESpace& space, const GeneralizedPolynomial& law,
                         const ManufacturedCase& problem, const SolverConfig& config);

}  // namespace forchfem
