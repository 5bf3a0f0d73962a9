#include "forchfem/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace forchfem {

GaussLegendre gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("quadrature: point count must be >= 1");

    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on the Legendre polynomial P_n over [-1, 1].
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map to [0, 1]; nodes come out symmetric around 0.
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.weights[i] = 0.5 * w;
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

QuadratureRule quadrature_rule(int degree) {
    if (degree < 1) throw std::invalid_argument("quadrature: degree must be >= 1");
    if (degree > 60) throw std::invalid_argument("quadrature: degree above 60 unsupported");

    // Collapse the unit square onto the triangle: x = u, y = v(1-u), with
    // Jacobian (1-u). A degree-d integrand becomes degree d+1 in u, so n
    // Gauss points per direction with 2n-1 >= d+1 are exact.
    const int n = (degree + 3) / 2;
    const GaussLegendre gl = gauss_legendre_01(n);

    QuadratureRule rule;
    rule.exactness = degree;
    rule.points.reserve(static_cast<std::size_t>(n) * n);
    rule.weights.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double u = gl.nodes[i];
        for (int j = 0; j < n; ++j) {
            const double x = u;
            const double y = gl.nodes[j] * (1.0 - u);
            rule.points.push_back({1.0 - x - y, x, y});
            rule.weights.push_back(gl.weights[i] * gl.weights[j] * (1.0 - u));
        }
    }
    return rule;
}

}  // namespace forchfem
