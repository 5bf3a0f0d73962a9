#include "forchfem/cases.hpp"

#include <cmath>
#include <stdexcept>

#include "forchfem/rng.hpp"

namespace forchfem {

namespace {

double sq(double v) { return v * v; }

// Edge classification for piecewise boundary data. Facet quadrature points
// carry exact 0/1 coordinates on their edge.
enum class Edge { left, right, bottom, top };

Edge classify_edge(Vec2 p) {
    const double tol = 1e-12;
    if (p.x < tol) return Edge::left;
    if (p.x > 1.0 - tol) return Edge::right;
    if (p.y < tol) return Edge::bottom;
    if (p.y > 1.0 - tol) return Edge::top;
    throw std::invalid_argument("cases: boundary flux evaluated at an interior point");
}

}  // namespace

ManufacturedCase example1() {
    ManufacturedCase c;
    c.name = "example1";
    c.law = GeneralizedPolynomial::two_term();

    const auto shape = [](Vec2 p) {
        return 0.5 * (p.x * p.x + p.y * p.y) - (p.x * p.x * p.x + p.y * p.y * p.y) / 3.0;
    };

    c.density = [shape](Vec2 p, double t) { return std::exp(-2.0 * t) * shape(p) + 1.0; };
    c.density_dt = [shape](Vec2 p, double t) { return -2.0 * std::exp(-2.0 * t) * shape(p); };
    c.density_gradient = [](Vec2 p, double t) {
        const double e = std::exp(-2.0 * t);
        return Vec2{e * p.x * (1.0 - p.x), e * p.y * (1.0 - p.y)};
    };
    c.initial = [shape](Vec2 p) { return shape(p) + 1.0; };
    c.forcing = [shape](Vec2 p, double t) {
        const double e = std::exp(-2.0 * t);
        // W vanishes only at the four corners; the floor avoids 0/0 there
        // (the full term tends to 0 like W).
        const double w = std::max(std::sqrt(sq(p.x * (1.0 - p.x)) + sq(p.y * (1.0 - p.y))),
                                  1e-300);
        const double root = std::sqrt(1.0 + 4.0 * e * w);
        const double num = sq(p.x) * sq(1.0 - p.x) * (1.0 - 2.0 * p.x) +
                           sq(p.y) * sq(1.0 - p.y) * (1.0 - 2.0 * p.y);
        return -2.0 * e * shape(p) - 4.0 * e * (1.0 - p.x - p.y) / (1.0 + root) +
               4.0 * e * e * num / (w * sq(1.0 + root) * root);
    };
    c.boundary_flux = [](Vec2, double) { return 0.0; };
    return c;
}

ManufacturedCase example2() {
    ManufacturedCase c;
    c.name = "example2";
    c.law = GeneralizedPolynomial::two_term();

    c.density = [](Vec2 p, double t) { return p.x * p.y * std::exp(-t) + 1.0; };
    c.density_dt = [](Vec2 p, double t) { return -p.x * p.y * std::exp(-t); };
    c.density_gradient = [](Vec2 p, double t) {
        const double e = std::exp(-t);
        return Vec2{e * p.y, e * p.x};
    };
    c.initial = [](Vec2 p) { return p.x * p.y + 1.0; };
    c.forcing = [](Vec2 p, double t) {
        const double e = std::exp(-t);
        const double r = std::max(std::hypot(p.x, p.y), 1e-300);
        const double root = std::sqrt(1.0 + 4.0 * e * r);
        return -e * p.x * p.y + 8.0 * e * e * p.x * p.y / (r * sq(1.0 + root) * root);
    };
    c.boundary_flux = [](Vec2 p, double t) {
        const double e = std::exp(-t);
        const double r = std::hypot(p.x, p.y);
        const double scale = 2.0 * e / (1.0 + std::sqrt(1.0 + 4.0 * e * r));
        switch (classify_edge(p)) {
            case Edge::left: return scale * p.y;
            case Edge::right: return -scale * p.y;
            case Edge::top: return -scale * p.x;
            case Edge::bottom: return scale * p.x;
        }
        return 0.0;
    };
    return c;
}

ManufacturedCase constant_case(const GeneralizedPolynomial& law, double value) {
    ManufacturedCase c;
    c.name = "constant";
    c.law = law;
    c.density = [value](Vec2, double) { return value; };
    c.density_dt = [](Vec2, double) { return 0.0; };
    c.density_gradient = [](Vec2, double) { return Vec2{0.0, 0.0}; };
    c.initial = [value](Vec2) { return value; };
    c.forcing = [](Vec2, double) { return 0.0; };
    c.boundary_flux = [](Vec2, double) { return 0.0; };
    return c;
}

ManufacturedCase steady_linear_case(const GeneralizedPolynomial& law) {
    ManufacturedCase c;
    c.name = "steady_linear";
    c.law = law;
    const double k1 = kernel(law, 1.0);
    c.density = [](Vec2 p, double) { return p.x; };
    c.density_dt = [](Vec2, double) { return 0.0; };
    c.density_gradient = [](Vec2, double) { return Vec2{1.0, 0.0}; };
    c.initial = [](Vec2 p) { return p.x; };
    c.forcing = [](Vec2, double) { return 0.0; };
    c.boundary_flux = [k1](Vec2 p, double) {
        switch (classify_edge(p)) {
            case Edge::left: return k1;
            case Edge::right: return -k1;
            case Edge::top:
            case Edge::bottom: return 0.0;
        }
        return 0.0;
    };
    return c;
}

ManufacturedCase case_by_name(const std::string& name, const GeneralizedPolynomial& law) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    if (name == "constant") return constant_case(law);
    if (name == "steady_linear") return steady_linear_case(law);
    throw std::invalid_argument("cases: unknown case name '" + name + "'");
}

CaseCheck check_case_consistency(const ManufacturedCase& c, int interior_samples,
                                 int boundary_samples, std::uint64_t seed) {
    Rng rng(seed);
    CaseCheck result;

    const auto analytic_flux = [&c](Vec2 p, double t) {
        return flux(c.law, c.density_gradient(p, t));
    };

    const double h = 1e-5;
    for (int i = 0; i < interior_samples; ++i) {
        const Vec2 p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)};
        const double t = rng.uniform(0.05, 1.0);
        const double div_flux =
            (analytic_flux({p.x + h, p.y}, t).x - analytic_flux({p.x - h, p.y}, t).x) /
                (2.0 * h) +
            (analytic_flux({p.x, p.y + h}, t).y - analytic_flux({p.x, p.y - h}, t).y) /
                (2.0 * h);
        const double residual = c.density_dt(p, t) - div_flux - c.forcing(p, t);
        result.max_pde_residual = std::max(result.max_pde_residual, std::abs(residual));
    }

    static const Vec2 normals[4] = {{-1.0, 0.0}, {1.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}};
    for (int i = 0; i < boundary_samples; ++i) {
        const int edge = static_cast<int>(rng.next_u64() % 4);
        const double s = rng.uniform(0.05, 0.95);
        Vec2 p;
        switch (edge) {
            case 0: p = {0.0, s}; break;
            case 1: p = {1.0, s}; break;
            case 2: p = {s, 0.0}; break;
            default: p = {s, 1.0}; break;
        }
        const double t = rng.uniform(0.0, 1.0);
        const double defect =
            dot(analytic_flux(p, t), normals[edge]) + c.boundary_flux(p, t);
        result.max_boundary_defect = std::max(result.max_boundary_defect, std::abs(defect));
    }
    return result;
}

}  // namespace forchfem
