#include "forchfem/analysis.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace forchfem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrates pointwise |integrand|^q over the mesh; integrand receives the
// cell, barycentric point and physical point.
template <typename F>
double lq_of(const FESpace& space, double q, int degree, const F& integrand) {
    const QuadratureRule rule = quadrature_rule(degree);
    const int cells = static_cast<int>(space.mesh().triangles().size());
    double acc = 0.0;
    for (int c = 0; c < cells; ++c) {
        const auto geom = space.cell_geometry(c);
        for (std::size_t p = 0; p < rule.points.size(); ++p) {
            const double v = std::abs(integrand(c, rule.points[p],
                                                geom.physical_point(rule.points[p])));
            acc += rule.weights[p] * geom.det * std::pow(v, q);
        }
    }
    return std::pow(acc, 1.0 / q);
}

template <typename F>
double max_over_samples(const FESpace& space, int degree, const F& integrand) {
    const QuadratureRule rule = quadrature_rule(degree);
    const int cells = static_cast<int>(space.mesh().triangles().size());
    double m = 0.0;
    for (int c = 0; c < cells; ++c) {
        const auto geom = space.cell_geometry(c);
        for (std::size_t p = 0; p < rule.points.size(); ++p)
            m = std::max(m, std::abs(integrand(c, rule.points[p],
                                               geom.physical_point(rule.points[p]))));
        // Nodal samples: cell corners and edge midpoints (covers all lattice
        // dofs across cells for both orders).
        static const std::array<double, 3> nodes[6] = {
            {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0},
            {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}, {0.5, 0.5, 0.0}};
        for (const auto& b : nodes)
            m = std::max(m, std::abs(integrand(c, b, geom.physical_point(b))));
    }
    return m;
}

void check_q(double q) {
    if (q < 1.0) throw std::invalid_argument("analysis: q must be >= 1");
}

}  // namespace

double lq_norm(const DensityField& field, double q, int degree) {
    check_q(q);
    const FESpace& space = *field.space;
    auto value = [&](int c, const std::array<double, 3>& b, Vec2) {
        return evaluate(field, c, b).value;
    };
    if (q == kInf) return max_over_samples(space, degree, value);
    return lq_of(space, q, degree, value);
}

double lq_norm(const DensityField& field, double q) {
    return lq_norm(field, q, field.space->default_quadrature_degree());
}

double lq_error_norm(const DensityField& field, const std::function<double(Vec2)>& exact,
                     double q) {
    check_q(q);
    const FESpace& space = *field.space;
    auto value = [&](int c, const std::array<double, 3>& b, Vec2 x) {
        return evaluate(field, c, b).value - exact(x);
    };
    const int degree = space.default_quadrature_degree();
    if (q == kInf) return max_over_samples(space, degree, value);
    return lq_of(space, q, degree, value);
}

double grad_lbeta_norm(const DensityField& field, double beta, int degree) {
    const FESpace& space = *field.space;
    return lq_of(space, beta, degree, [&](int c, const std::array<double, 3>& b, Vec2) {
        return norm(evaluate(field, c, b).gradient);
    });
}

double grad_lbeta_norm(const DensityField& field, double beta) {
    return grad_lbeta_norm(field, beta, field.space->default_quadrature_degree());
}

double grad_lbeta_error_norm(const DensityField& field,
                             const std::function<Vec2(Vec2)>& exact_gradient, double beta) {
    const FESpace& space = *field.space;
    return lq_of(space, beta, space.default_quadrature_degree(),
                 [&](int c, const std::array<double, 3>& b, Vec2 x) {
                     return norm(evaluate(field, c, b).gradient - exact_gradient(x));
                 });
}

ErrorRecord error_at_final_time(const RunReport& report, const ManufacturedCase& problem,
                                double extra_q, bool include_linf) {
    const FESpace& space = *report.final_field.space;
    const double t = report.final_time;
    const DerivedExponents exps = derived_exponents(problem.law);

    ErrorRecord record;
    record.n = space.mesh().subdivisions();
    record.h = space.mesh().max_diameter();
    record.dt = report.dt;

    auto exact = [&](Vec2 x) { return problem.density(x, t); };
    auto exact_grad = [&](Vec2 x) { return problem.density_gradient(x, t); };

    record.l2_error = lq_error_norm(report.final_field, exact, 2.0);
    record.grad_lbeta_error = grad_lbeta_error_norm(report.final_field, exact_grad, exps.beta);
    if (extra_q > 0.0) {
        record.extra_q = extra_q;
        record.lq_error = lq_error_norm(report.final_field, exact, extra_q);
    }
    if (include_linf) record.linf_error = lq_error_norm(report.final_field, exact, kInf);
    return record;
}

ConvergenceTable convergence_rates(std::vector<ErrorRecord> rows) {
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].n != 2 * rows[i - 1].n)
            throw std::invalid_argument("analysis: mesh sizes must double between rows");

    ConvergenceTable table;
    table.rows = std::move(rows);
    const auto rate = [](double prev, double curr) -> std::optional<double> {
        if (prev <= 0.0 || curr <= 0.0) return std::nullopt;
        return std::log2(prev / curr);
    };
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        table.l2_rates.push_back(rate(table.rows[i - 1].l2_error, table.rows[i].l2_error));
        table.grad_lbeta_rates.push_back(
            rate(table.rows[i - 1].grad_lbeta_error, table.rows[i].grad_lbeta_error));
    }
    return table;
}

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string rate_cell(const std::vector<std::optional<double>>& rates, std::size_t row,
                      const char* spec, const char* blank) {
    if (row == 0 || !rates[row - 1].has_value()) return blank;
    return fmt(spec, *rates[row - 1]);
}

}  // namespace

void write_csv(std::ostream& out, const ConvergenceTable& table) {
    out << "N,h,dt,l2_error,l2_rate,grad_lbeta_error,grad_lbeta_rate\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const ErrorRecord& r = table.rows[i];
        out << r.n << ',' << fmt("%.6e", r.h) << ',' << fmt("%.6e", r.dt) << ','
            << fmt("%.6e", r.l2_error) << ',' << rate_cell(table.l2_rates, i, "%.4f", "")
            << ',' << fmt("%.6e", r.grad_lbeta_error) << ','
            << rate_cell(table.grad_lbeta_rates, i, "%.4f", "") << '\n';
    }
}

void write_markdown(std::ostream& out, const ConvergenceTable& table) {
    out << "| N | L2 error | Rate | grad L^beta error | Rate |\n";
    out << "|---|----------|------|-------------------|------|\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const ErrorRecord& r = table.rows[i];
        out << "| " << r.n << " | " << fmt("%.2E", r.l2_error) << " | "
            << rate_cell(table.l2_rates, i, "%.2f", "-") << " | "
            << fmt("%.2E", r.grad_lbeta_error) << " | "
            << rate_cell(table.grad_lbeta_rates, i, "%.2f", "-") << " |\n";
    }
}

}  // namespace forchfem
