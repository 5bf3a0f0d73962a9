#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "forchfem/law.hpp"
#include "forchfem/vec2.hpp"

namespace forchfem {

// Manufactured problem: analytic density rho, data f, psi, rho0 chosen so
// that rho solves rho_t - div(K(|grad rho|) grad rho) = f with the flux
// boundary condition K(|grad rho|) grad rho . nu + psi = 0.
struct ManufacturedCase {
    std::string name;
    GeneralizedPolynomial law = GeneralizedPolynomial::two_term();
    bool has_exact = true;

    std::function<double(Vec2, double)> density;           // rho(x, t)
    std::function<double(Vec2, double)> density_dt;        // d rho / dt
    std::function<Vec2(Vec2, double)> density_gradient;    // grad rho
    std::function<double(Vec2)> initial;                   // rho0(x) = rho(x, 0)
    std::function<double(Vec2, double)> forcing;           // f(x, t)
    std::function<double(Vec2, double)> boundary_flux;     // psi(x, t), x on the boundary
};

// Two-term law, rho = e^{-2t} [ (x1^2+x2^2)/2 - (x1^3+x2^3)/3 ] + 1 on the
// unit square, zero flux on the whole boundary.
ManufacturedCase example1();

// Two-term law, rho = x1 x2 e^{-t} + 1, nonzero flux on every edge.
ManufacturedCase example2();

// rho identically `value`; zero data. Valid for any law.
ManufacturedCase constant_case(const GeneralizedPolynomial& law, double value = 1.0);

// Steady state rho = x1 with the matching boundary flux +-K(1) on the
// x1-faces; lies in every Lagrange space, so the scheme reproduces it exactly.
ManufacturedCase steady_linear_case(const GeneralizedPolynomial& law);

// Lookup of the built-in cases ("example1", "example2", "constant",
// "steady_linear"). Throws std::invalid_argument for unknown names.
ManufacturedCase case_by_name(const std::string& name, const GeneralizedPolynomial& law);

// Consistency oracle: the divergence of the analytic flux is approximated by
// central finite differences (step 1e-5) and compared against rho_t - f at
// random interior points; the boundary defect K grad rho . nu + psi is
// evaluated at random boundary points.
struct CaseCheck {
    double max_pde_residual = 0.0;
    double max_boundary_defect = 0.0;

    bool pass(double pde_tol = 1e-4, double boundary_tol = 1e-8) const {
        return max_pde_residual <= pde_tol && max_boundary_defect <= boundary_tol;
    }
};

CaseCheck check_case_consistency(const ManufacturedCase& c, int interior_samples = 100,
                                 int boundary_samples = 100, std::uint64_t seed = 7);

}  // namespace forchfem
