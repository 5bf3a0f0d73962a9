#include <doctest.h>

#include <cmath>

#include "forchfem/errors.hpp"
#include "forchfem/law.hpp"
#include "forchfem/law_properties.hpp"
#include "forchfem/rng.hpp"
#include "oracles.hpp"

using namespace forchfem;

namespace {
const GeneralizedPolynomial two_term = GeneralizedPolynomial::two_term();

double closed_form_k(double xi) { return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * xi)); }
}  // namespace

TEST_CASE("law: construction rejects invalid term lists") {
    CHECK_THROWS_AS(GeneralizedPolynomial({0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPolynomial({0.5, 1.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPolynomial({0.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPolynomial({0.0, 1.0}, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPolynomial({0.0, 1.0, 0.5}, {1.0, 1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPolynomial({0.0, 0.5, 1.0}, {1.0, -0.1, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("law: g evaluation") {
    CHECK(two_term(1.0) == doctest::Approx(2.0).epsilon(1e-15));
    // s = 0 leaves only the constant term.
    const GeneralizedPolynomial law({0.0, 0.7, 2.3}, {0.4, 1.0, 2.0});
    CHECK(law(0.0) == doctest::Approx(0.4).epsilon(1e-15));
    // Term-by-term sum: 1 + 2 s + s^{1.5} at s = 4 -> 1 + 8 + 8.
    const GeneralizedPolynomial mixed({0.0, 1.0, 1.5}, {1.0, 2.0, 1.0});
    CHECK(mixed(4.0) == doctest::Approx(17.0).epsilon(1e-15));
    CHECK_THROWS_AS(two_term(-1.0), std::invalid_argument);
}

TEST_CASE("law: root of s g(s) = xi") {
    CHECK(solve_s(two_term, 0.0) == 0.0);
    // Closed form for the two-term law: s = (-1 + sqrt(1+4 xi))/2.
    CHECK(solve_s(two_term, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(solve_s(two_term, 6.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(solve_s(two_term, -0.5), std::invalid_argument);

    // Residual contract across scales and laws.
    const GeneralizedPolynomial law({0.0, 0.5, 2.0}, {0.3, 1.2, 0.7});
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double xi = rng.log_uniform(1e-10, 1e12);
        const double s = solve_s(law, xi);
        CHECK(std::abs(s * law(s) - xi) <= 1e-12 * std::max(xi, 1.0));
    }
}

TEST_CASE("law: kernel matches the two-term closed form") {
    CHECK(kernel(two_term, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernel(two_term, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    for (const double xi : {1e-6, 0.1, 1.0, 10.0, 1e4, 1e10})
        CHECK(kernel(two_term, xi) == doctest::Approx(closed_form_k(xi)).epsilon(1e-10));
    // K(0) = 1/a0 for any law.
    const GeneralizedPolynomial law({0.0, 1.5}, {0.25, 3.0});
    CHECK(kernel(law, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("law: kernel derivative") {
    // Closed-form derivative of 2/(1+sqrt(1+4 xi)) at 0 is -1.
    CHECK(kernel_derivative(two_term, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));

    const GeneralizedPolynomial law({0.0, 1.0, 3.0}, {0.8, 0.5, 0.2});
    for (const double xi : {0.1, 1.0, 10.0, 100.0}) {
        const double h = std::max(xi, 1.0) * 1e-5;
        const double fd = (kernel(law, xi + h) - kernel(law, xi - h)) / (2.0 * h);
        CHECK(kernel_derivative(law, xi) == doctest::Approx(fd).epsilon(1e-6));
    }

    const DerivedExponents exps = derived_exponents(law);
    for (int i = 0; i < 1000; ++i) {
        const double xi = std::pow(10.0, -6.0 + 15.0 * i / 999.0);
        const double kpxi = kernel_derivative(law, xi) * xi;
        CHECK(kpxi <= 1e-15);
        CHECK(kpxi >= -exps.a * kernel(law, xi) - 1e-12);
    }
}

TEST_CASE("law: potential H") {
    CHECK(kernel_potential(two_term, 0.0) == 0.0);

    // Exact value for the two-term law via t = sqrt(1+4u):
    // H(xi) = T^3/6 - T^2/4 + 1/12 with T = sqrt(1+4 xi).
    const double t1 = std::sqrt(5.0);
    const double exact1 = t1 * t1 * t1 / 6.0 - t1 * t1 / 4.0 + 1.0 / 12.0;
    CHECK(kernel_potential(two_term, 1.0) == doctest::Approx(exact1).epsilon(1e-8));

    // Independent fixed-order composite quadrature of the original form.
    const auto integrand = [&](double sigma) { return kernel(two_term, std::sqrt(sigma)); };
    const double brute = oracles::simpson(integrand, 0.0, 1.0, 4000);
    CHECK(kernel_potential(two_term, 1.0) == doctest::Approx(brute).epsilon(1e-6));

    // Sandwich K xi^2 <= H <= 2 K xi^2 for a three-term law.
    const GeneralizedPolynomial law({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0});
    for (int i = 0; i < 100; ++i) {
        const double xi = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
        const double h = kernel_potential(law, xi);
        const double kxx = kernel(law, xi) * xi * xi;
        CHECK(h >= kxx * (1.0 - 1e-9));
        CHECK(h <= 2.0 * kxx * (1.0 + 1e-9));
    }
}

TEST_CASE("law: flux map") {
    const Vec2 zero = flux(two_term, {0.0, 0.0});
    CHECK(zero.x == 0.0);
    CHECK(zero.y == 0.0);

    // K(2) = 0.5, so flux of (2, 0) is (1, 0).
    const Vec2 f = flux(two_term, {2.0, 0.0});
    CHECK(f.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.y == doctest::Approx(0.0));

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Vec2 y{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        const double angle = rng.uniform(0.0, 6.28);
        const double ca = std::cos(angle), sa = std::sin(angle);
        const Vec2 ry{ca * y.x - sa * y.y, sa * y.x + ca * y.y};
        const Vec2 fy = flux(two_term, y);
        const Vec2 rfy{ca * fy.x - sa * fy.y, sa * fy.x + ca * fy.y};
        const Vec2 fry = flux(two_term, ry);
        CHECK(norm(fry - rfy) <= 1e-12 * std::max(1.0, norm(fy)));
    }
}

TEST_CASE("law: derived exponents") {
    const DerivedExponents d2 = derived_exponents(two_term);
    CHECK(d2.a == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d2.beta == doctest::Approx(1.5).epsilon(1e-15));

    const GeneralizedPolynomial quad({0.0, 2.0}, {1.0, 1.0});
    const DerivedExponents dq = derived_exponents(quad);
    CHECK(dq.a == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(dq.beta == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(dq.lambda == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(dq.gamma == doctest::Approx(0.5).epsilon(1e-14));

    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const DerivedExponents d = derived_exponents(random_law(seed));
        CHECK(d.lambda * (d.beta - 1.0) == doctest::Approx(d.beta).epsilon(1e-14));
    }
}

TEST_CASE("law: property suite passes for two-term and random laws") {
    for (const auto& r : law_property_suite(two_term, 42)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    for (const auto& r : law_property_suite(random_law(7), 43)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
