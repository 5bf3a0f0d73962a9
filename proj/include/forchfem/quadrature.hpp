#pragma once

#include <array>
#include <vector>

namespace forchfem {

// Gauss-Legendre rule on [0, 1]; n points integrate degree 2n-1 exactly.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre_01(int n);

// Quadrature on the reference triangle {x >= 0, y >= 0, x + y <= 1}.
// Points are stored as barycentric triples; weights are positive and sum to
// the reference area 1/2. All points are strictly interior.
struct QuadratureRule {
    std::vector<std::array<double, 3>> points;  // (1-x-y, x, y)
    std::vector<double> weights;
    int exactness = 0;  // exact for total degree <= exactness
};

// Conical-product Gauss rule exact for polynomials of total degree <= degree.
// Throws std::invalid_argument for degree < 1.
QuadratureRule quadrature_rule(int degree);

}  // namespace forchfem
