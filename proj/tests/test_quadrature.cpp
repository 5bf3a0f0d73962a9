#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "forchfem/quadrature.hpp"

using namespace forchfem;

namespace {

// Exact integral of x^p y^q over the reference triangle: p! q! / (p+q+2)!.
double monomial_integral(int p, int q) {
    double result = 1.0;
    for (int k = 1; k <= p; ++k) result *= k;
    for (int k = 1; k <= q; ++k) result *= k;
    for (int k = 1; k <= p + q + 2; ++k) result /= k;
    return result;
}

double integrate_monomial(const QuadratureRule& rule, int p, int q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.points.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.points[i][1], p) * std::pow(rule.points[i][2], q);
    return acc;
}

}  // namespace

TEST_CASE("quadrature: gauss-legendre nodes match published values") {
    const GaussLegendre gl = gauss_legendre_01(4);
    // 4-point rule on [-1,1]: +-0.3399810435848563, +-0.8611363115940526,
    // weights 0.6521451548625461, 0.3478548451374538; mapped to [0,1].
    CHECK(gl.nodes[0] == doctest::Approx(0.5 * (1.0 - 0.8611363115940526)).epsilon(1e-14));
    CHECK(gl.nodes[1] == doctest::Approx(0.5 * (1.0 - 0.3399810435848563)).epsilon(1e-14));
    CHECK(gl.weights[0] == doctest::Approx(0.5 * 0.3478548451374538).epsilon(1e-13));
    CHECK(gl.weights[1] == doctest::Approx(0.5 * 0.6521451548625461).epsilon(1e-13));
    double sum = 0.0;
    for (double w : gl.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadrature: triangle rules are positive, interior and exact") {
    CHECK_THROWS_AS(quadrature_rule(0), std::invalid_argument);

    for (int degree : {1, 2, 3, 4, 5, 6, 8, 10}) {
        const QuadratureRule rule = quadrature_rule(degree);
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.points.size(); ++i) {
            CHECK(rule.weights[i] > 0.0);
            for (double b : rule.points[i]) CHECK(b > 0.0);  // strictly interior
            wsum += rule.weights[i];
        }
        CHECK(wsum == doctest::Approx(0.5).epsilon(1e-14));

        // Every monomial up to the stated exactness.
        for (int p = 0; p <= degree; ++p)
            for (int q = 0; p + q <= degree; ++q)
                CHECK(integrate_monomial(rule, p, q) ==
                      doctest::Approx(monomial_integral(p, q)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature: stated example integrals") {
    const QuadratureRule rule = quadrature_rule(4);
    CHECK(integrate_monomial(rule, 1, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(std::abs(integrate_monomial(rule, 2, 2) - 1.0 / 180.0) < 1e-14);
}
