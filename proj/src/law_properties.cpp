#include "forchfem/law_properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "forchfem/rng.hpp"

namespace forchfem {

namespace {

std::string detail(double worst, double bound) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst %.3e vs bound %.3e", worst, bound);
    return buf;
}

// Mix of scales: zero, moderate and log-uniform up to 1e12.
double sample_xi(Rng& rng) {
    const double u = rng.uniform();
    if (u < 0.02) return 0.0;
    if (u < 0.4) return rng.uniform(0.0, 2.0);
    return rng.log_uniform(1e-8, 1e12);
}

Vec2 sample_vector(Rng& rng) {
    const double r = rng.log_uniform(1e-6, 1e6);
    const double angle = rng.uniform(0.0, 2.0 * 3.141592653589793);
    return {r * std::cos(angle), r * std::sin(angle)};
}

}  // namespace

GeneralizedPolynomial random_law(std::uint64_t seed) {
    Rng rng(seed);
    const int terms = 2 + static_cast<int>(rng.next_u64() % 3);
    std::vector<double> exps{0.0};
    std::vector<double> coeffs{rng.uniform(0.1, 2.0)};
    std::vector<double> upper;
    for (int i = 1; i < terms; ++i) upper.push_back(rng.uniform(0.05, 4.0));
    std::sort(upper.begin(), upper.end());
    for (int i = 1; i < terms; ++i) {
        exps.push_back(upper[i - 1]);
        coeffs.push_back(rng.uniform(0.1, 2.0));
    }
    return GeneralizedPolynomial(std::move(exps), std::move(coeffs));
}

std::vector<PropertyResult> law_property_suite(const GeneralizedPolynomial& law,
                                               std::uint64_t seed) {
    std::vector<PropertyResult> results;
    const DerivedExponents exps = derived_exponents(law);

    {  // |s g(s) - xi| <= 1e-12 max(xi, 1) over 1e5 samples
        Rng rng(seed);
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const double xi = sample_xi(rng);
            const double s = solve_s(law, xi);
            worst = std::max(worst, std::abs(s * law(s) - xi) / std::max(xi, 1.0));
        }
        results.push_back({"root_consistency", worst <= 1e-12, detail(worst, 1e-12)});
    }

    {  // xi1 < xi2 => K(xi1) >= K(xi2)
        Rng rng(seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            double x1 = sample_xi(rng), x2 = sample_xi(rng);
            if (x1 > x2) std::swap(x1, x2);
            if (x1 == x2) continue;
            worst = std::max(worst, kernel(law, x2) - kernel(law, x1));
        }
        results.push_back({"kernel_decreasing", worst <= 1e-13, detail(worst, 1e-13)});
    }

    for (int n = 1; n <= 2; ++n) {  // K(xi) xi^n non-decreasing
        Rng rng(seed + 2 + n);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            double x1 = rng.log_uniform(1e-8, 1e10), x2 = rng.log_uniform(1e-8, 1e10);
            if (x1 > x2) std::swap(x1, x2);
            const double v1 = kernel(law, x1) * std::pow(x1, n);
            const double v2 = kernel(law, x2) * std::pow(x2, n);
            worst = std::max(worst, (v1 - v2) / std::max(v1, 1e-300));
        }
        const std::string name = "kernel_xi_pow" + std::to_string(n) + "_nondecreasing";
        results.push_back({name, worst <= 1e-12, detail(worst, 1e-12)});
    }

    {  // -a K(xi) <= K'(xi) xi <= 0 at 1000 log-spaced points
        double worst_low = 0.0, worst_high = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double xi = std::pow(10.0, -6.0 + 15.0 * i / 999.0);
            const double kx = kernel(law, xi);
            const double kpxi = kernel_derivative(law, xi) * xi;
            worst_low = std::max(worst_low, (-exps.a * kx) - kpxi);   // > 0 means violated
            worst_high = std::max(worst_high, kpxi);                  // > 0 means violated
        }
        const double worst = std::max(worst_low, worst_high);
        results.push_back({"derivative_bracket", worst <= 1e-12, detail(worst, 1e-12)});
    }

    {  // K' against central differences of K at fixed points, 1e-6 relative
        double worst = 0.0;
        for (const double xi : {0.1, 1.0, 10.0, 100.0}) {
            const double h = std::max(xi, 1.0) * 1e-5;
            const double fd = (kernel(law, xi + h) - kernel(law, xi - h)) / (2.0 * h);
            const double kp = kernel_derivative(law, xi);
            worst = std::max(worst, std::abs(kp - fd) / std::abs(kp));
        }
        results.push_back({"derivative_fd_match", worst <= 1e-6, detail(worst, 1e-6)});
    }

    {  // (F(y') - F(y)) . (y' - y) >= (beta-1) K(max|.|) |y'-y|^2 - 1e-12
        Rng rng(seed + 5);
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const Vec2 y = sample_vector(rng), yp = sample_vector(rng);
            const Vec2 d = yp - y;
            const double lhs = dot(flux(law, yp) - flux(law, y), d);
            const double rhs =
                (exps.beta - 1.0) * kernel(law, std::max(norm(y), norm(yp))) * dot(d, d);
            worst = std::max(worst, rhs - lhs);
        }
        results.push_back({"vector_monotonicity", worst <= 1e-12, detail(worst, 1e-12)});
    }

    {  // |F(y') - F(y)| <= (1/a0 + 1e-9) |y' - y|
        Rng rng(seed + 6);
        const double bound = 1.0 / law.a0() + 1e-9;
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const Vec2 y = sample_vector(rng), yp = sample_vector(rng);
            const double dy = norm(yp - y);
            if (dy == 0.0) continue;
            worst = std::max(worst, norm(flux(law, yp) - flux(law, y)) / dy);
        }
        results.push_back({"flux_lipschitz", worst <= bound, detail(worst, bound)});
    }

    {  // K(xi) xi^2 <= H(xi) <= 2 K(xi) xi^2 at 100 sampled xi
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double xi = std::pow(10.0, -3.0 + 7.0 * i / 99.0);
            const double kxx = kernel(law, xi) * xi * xi;
            const double h = kernel_potential(law, xi);
            worst = std::max(worst, (kxx - h) / kxx);          // lower bound violation
            worst = std::max(worst, (h - 2.0 * kxx) / kxx);    // upper bound violation
        }
        results.push_back({"potential_sandwich", worst <= 1e-9, detail(worst, 1e-9)});
    }

    {  // flux(R y) = R flux(y)
        Rng rng(seed + 7);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec2 y = sample_vector(rng);
            const double a = rng.uniform(0.0, 2.0 * 3.141592653589793);
            const double ca = std::cos(a), sa = std::sin(a);
            const Vec2 ry{ca * y.x - sa * y.y, sa * y.x + ca * y.y};
            const Vec2 f = flux(law, y);
            const Vec2 rf{ca * f.x - sa * f.y, sa * f.x + ca * f.y};
            const Vec2 fr = flux(law, ry);
            worst = std::max(worst, norm(fr - rf) / std::max(norm(f), 1e-300));
        }
        results.push_back({"flux_rotation_equivariance", worst <= 1e-12, detail(worst, 1e-12)});
    }

    {  // exponent identities; gamma = a/(2-a) ranges over (0,1) for a in (0,1)
        const double id = std::abs(exps.lambda * (exps.beta - 1.0) - exps.beta);
        const bool ranges = exps.a > 0.0 && exps.a < 1.0 && exps.beta > 1.0 &&
                            exps.beta < 2.0 && exps.lambda > 2.0 && exps.gamma > 0.0 &&
                            exps.gamma < 1.0;
        results.push_back({"derived_exponents", id <= 1e-14 && ranges, detail(id, 1e-14)});
    }

    if (law.is_two_term()) {
        {  // closed form K(xi) = 2/(1+sqrt(1+4 xi)) to 1e-10
            Rng rng(seed + 8);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double xi = sample_xi(rng);
                const double closed = 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * xi));
                worst = std::max(worst, std::abs(kernel(law, xi) - closed));
            }
            results.push_back({"two_term_closed_form", worst <= 1e-10, detail(worst, 1e-10)});
        }
        {  // K(xi) (1+xi)^{1/2} in [0.5, 1.5] over [0, 1e12]
            double lo = 10.0, hi = 0.0;
            for (int i = 0; i <= 10000; ++i) {
                const double xi = i == 0 ? 0.0 : std::pow(10.0, -6.0 + 18.0 * i / 10000.0);
                const double v = kernel(law, xi) * std::sqrt(1.0 + xi);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            const bool pass = lo >= 0.5 && hi <= 1.5;
            results.push_back({"two_term_degeneracy_envelope", pass,
                               detail(lo, 0.5) + ", " + detail(hi, 1.5)});
        }
    }

    return results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace forchfem
