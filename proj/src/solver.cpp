#include "forchfem/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "forchfem/analysis.hpp"

namespace forchfem {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double sum(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("dt", "must be positive");
    if (!(final_time >= dt)) throw ConfigError("final_time", "must be at least dt");
    if (!(nonlinear_tol > 0.0)) throw ConfigError("nonlinear_tol", "must be positive");
    if (!(linear_tol > 0.0)) throw ConfigError("linear_tol", "must be positive");
    if (max_nonlinear_iters < 1) throw ConfigError("max_nonlinear_iters", "must be >= 1");
    if (!(damping > 0.0 && damping <= 1.0)) throw ConfigError("damping", "must be in (0, 1]");
    for (double q : monitor_q)
        if (!(q >= 1.0)) throw ConfigError("q_list", "entries must be >= 1");
}

std::vector<double> linear_solve(const SparseMatrix& a, std::span<const double> b,
                                 double tol, const std::vector<double>* initial) {
    const int n = a.dim();
    const double norm_b = norm2(b);
    if (norm_b == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);

    std::vector<double> x = initial ? *initial
                                    : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    std::vector<double> r(static_cast<std::size_t>(n));
    a.apply(x, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];

    const std::vector<double> diag = a.diagonal();
    std::vector<double> z(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n)),
        ap(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[i] = r[i] / diag[i];
    p = z;
    double rz = 0.0;
    for (int i = 0; i < n; ++i) rz += r[i] * z[i];

    const long cap = 10L * n;
    double res = norm2(r);
    long it = 0;
    while (res > tol * norm_b) {
        if (it++ >= cap) throw SolverError("linear solve: iteration cap exceeded");
        a.apply(p, ap);
        double pap = 0.0;
        for (int i = 0; i < n; ++i) pap += p[i] * ap[i];
        if (!(pap > 0.0)) throw SolverError("linear solve: matrix is not positive definite");
        const double alpha = rz / pap;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        res = norm2(r);
        double rz_next = 0.0;
        for (int i = 0; i < n; ++i) {
            z[i] = r[i] / diag[i];
            rz_next += r[i] * z[i];
        }
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    return x;
}

int RunReport::max_iterations() const {
    int m = 0;
    for (const auto& s : steps) m = std::max(m, s.iterations);
    return m;
}

double RunReport::max_l2_norm() const {
    double m = initial_l2;
    for (const auto& s : steps) m = std::max(m, s.l2_norm);
    return m;
}

double RunReport::max_mass_defect() const {
    double m = 0.0;
    for (const auto& s : steps) m = std::max(m, s.mass_defect);
    return m;
}

StepResult backward_euler_step_detailed(const FESpace& space, const GeneralizedPolynomial& law,
                                        const DensityField& prev, double t_next,
                                        const SolverConfig& config,
                                        const std::function<double(Vec2, double)>& f,
                                        const std::function<double(Vec2, double)>& psi) {
    const int n = space.dof_count();
    const SparseMatrix mass = mass_matrix(space);
    const std::vector<double> load_f = volume_load(space, f, t_next);
    const std::vector<double> load_psi = boundary_load(space, psi, t_next);

    // Right-hand side M prev / dt + F - Psi.
    std::vector<double> rhs = mass.apply(prev.coeffs);
    for (int i = 0; i < n; ++i) rhs[i] = rhs[i] / config.dt + load_f[i] - load_psi[i];

    // R(c) = M(c - prev)/dt + S(c) + Psi - F = S(c) + M c / dt - rhs.
    const auto residual_of = [&](const DensityField& field) {
        std::vector<double> r = stiffness_apply(space, law, field);
        const std::vector<double> m_c = mass.apply(field.coeffs);
        for (int i = 0; i < n; ++i) r[i] += m_c[i] / config.dt - rhs[i];
        return r;
    };

    double damping = config.damping;
    int retries = 0;

    while (true) {  // damping retry loop
        DensityField current = prev;
        current.space = &space;
        double previous_update = std::numeric_limits<double>::infinity();
        bool monotonicity_violated = false;
        StepRecord record;
        record.time = t_next;
        record.damping_retries = retries;

        for (int k = 0; k < config.max_nonlinear_iters; ++k) {
            std::vector<double> next;
            if (config.linearization == Linearization::picard) {
                const SparseMatrix a = picard_matrix(space, law, current);
                const SparseMatrix system = SparseMatrix::weighted_sum(1.0 / config.dt, mass,
                                                                       1.0, a);
                next = linear_solve(system, rhs, config.linear_tol, &current.coeffs);
                if (damping != 1.0)
                    for (int i = 0; i < n; ++i)
                        next[i] = current.coeffs[i] + damping * (next[i] - current.coeffs[i]);
            } else {
                const std::vector<double> r = residual_of(current);
                const SparseMatrix j = tangent_matrix(space, law, current);
                const SparseMatrix system = SparseMatrix::weighted_sum(1.0 / config.dt, mass,
                                                                       1.0, j);
                std::vector<double> neg_r(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) neg_r[i] = -r[i];
                const std::vector<double> delta = linear_solve(system, neg_r, config.linear_tol);
                next = current.coeffs;
                for (int i = 0; i < n; ++i) next[i] += damping * delta[i];
            }

            double update = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = next[i] - current.coeffs[i];
                update += d * d;
            }
            update = std::sqrt(update);
            current.coeffs = std::move(next);

            if (k >= 1 && update > previous_update * (1.0 + 1e-10)) {
                monotonicity_violated = true;
                break;
            }
            previous_update = update;

            const double res_norm = norm2(residual_of(current));
            if (update <= config.nonlinear_tol && res_norm <= config.nonlinear_tol) {
                record.iterations = k + 1;
                record.update_norm = update;
                record.residual_norm = res_norm;
                return {std::move(current), record};
            }
        }

        if (monotonicity_violated && retries < 3) {
            damping *= 0.5;
            ++retries;
            continue;
        }
        const double res_norm = norm2(residual_of(current));
        throw NonlinearSolveError(
            "nonlinear step at t=" + std::to_string(t_next) +
                (monotonicity_violated ? " stopped making progress" : " hit the iteration cap"),
            current.coeffs, res_norm);
    }
}

DensityField backward_euler_step(const FESpace& space, const GeneralizedPolynomial& law,
                                 const DensityField& prev, double t_next,
                                 const SolverConfig& config,
                                 const std::function<double(Vec2, double)>& f,
                                 const std::function<double(Vec2, double)>& psi) {
    return backward_euler_step_detailed(space, law, prev, t_next, config, f, psi).field;
}

RunReport run_simulation(const FESpace& space, const GeneralizedPolynomial& law,
                         const ManufacturedCase& problem, const SolverConfig& config) {
    config.validate();
    const long steps = std::max(1L, std::lround(config.final_time / config.dt));
    const double dt = config.final_time / static_cast<double>(steps);
    SolverConfig step_config = config;
    step_config.dt = dt;

    const DerivedExponents exps = derived_exponents(law);
    const SparseMatrix mass = mass_matrix(space);

    RunReport report;
    report.dt = dt;
    report.final_time = config.final_time;

    DensityField rho = l2_project(space, problem.initial);
    report.initial_l2 = lq_norm(rho, 2.0);

    for (long step = 1; step <= steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        StepResult result;
        try {
            result = backward_euler_step_detailed(space, law, rho, t, step_config,
                                                  problem.forcing, problem.boundary_flux);
        } catch (NonlinearSolveError& err) {
            err.step_index = static_cast<int>(step);
            throw;
        }

        StepRecord record = result.record;
        // Discrete mass balance: test function w_h = 1.
        const std::vector<double> m_new = mass.apply(result.field.coeffs);
        const std::vector<double> m_old = mass.apply(rho.coeffs);
        const std::vector<double> load_f = volume_load(space, problem.forcing, t);
        const std::vector<double> load_psi = boundary_load(space, problem.boundary_flux, t);
        record.mass_defect = std::abs((sum(m_new) - sum(m_old)) / dt + sum(load_psi) -
                                      sum(load_f));

        rho = std::move(result.field);
        record.l2_norm = lq_norm(rho, 2.0);
        record.grad_lbeta_norm = grad_lbeta_norm(rho, exps.beta);
        for (double q : config.monitor_q) record.q_norms.push_back(lq_norm(rho, q));
        report.steps.push_back(std::move(record));
    }

    report.final_field = std::move(rho);
    return report;
}

}  // namespace forchfem
