#pragma once

#include <span>
#include <vector>

#include "forchfem/vec2.hpp"

namespace forchfem {

// Generalized polynomial g(s) = a_0 s^{alpha_0} + ... + a_N s^{alpha_N} with
// real exponents 0 = alpha_0 < alpha_1 < ... < alpha_N and non-negative
// coefficients, a_0 > 0, a_N > 0. This is the momentum-law nonlinearity; the
// diffusivity kernel K below is derived from it.
class GeneralizedPolynomial {
public:
    GeneralizedPolynomial(std::vector<double> exponents, std::vector<double> coefficients);

    // The two-term law g(s) = 1 + s.
    static GeneralizedPolynomial two_term();

    // g(s), s >= 0. Throws std::invalid_argument for negative s.
    double operator()(double s) const;

    // g'(s), s >= 0.
    double derivative(double s) const;

    double a0() const { return coefficients_.front(); }
    double leading_exponent() const { return exponents_.back(); }
    std::span<const double> exponents() const { return exponents_; }
    std::span<const double> coefficients() const { return coefficients_; }

    bool is_two_term() const;

private:
    std::vector<double> exponents_;
    std::vector<double> coefficients_;
};

// Exponents derived from the degree of g: a = alpha_N/(alpha_N+1) in (0,1),
// beta = 2-a, lambda = beta/(beta-1), gamma = a/beta.
struct DerivedExponents {
    double a;
    double beta;
    double lambda;
    double gamma;
};

DerivedExponents derived_exponents(const GeneralizedPolynomial& law);

// Unique non-negative root of s*g(s) = xi. Safeguarded Newton on the convex
// increasing map s -> s*g(s), with a bisection fallback; converges to
// |s*g(s) - xi| <= 1e-12 * max(xi, 1).
double solve_s(const GeneralizedPolynomial& law, double xi);

// Diffusivity kernel K(xi) = 1/g(s(xi)). Strictly decreasing from K(0)=1/a_0,
// decaying like xi^{-a} at infinity.
double kernel(const GeneralizedPolynomial& law, double xi);

// K'(xi) by implicit differentiation: K' = -g'(s) s'(xi) / g(s)^2 with
// s'(xi) = 1/(g(s) + s g'(s)). Satisfies -a K(xi) <= K'(xi) xi <= 0.
double kernel_derivative(const GeneralizedPolynomial& law, double xi);

// Potential H(xi) = integral of K(sqrt(sigma)) for sigma in [0, xi^2],
// evaluated as integral of 2u K(u) over [0, xi] by adaptive Gauss-Kronrod
// refinement with relative tolerance 1e-8. K(xi) xi^2 <= H(xi) <= 2 K(xi) xi^2.
double kernel_potential(const GeneralizedPolynomial& law, double xi);

// Vector flux map y -> K(|y|) y. Monotone and Lipschitz with constant 1/a_0.
Vec2 flux(const GeneralizedPolynomial& law, const Vec2& y);

}  // namespace forchfem
