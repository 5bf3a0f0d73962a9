#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forchfem/law.hpp"

namespace forchfem {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst observed value vs bound
};

// Randomized checks of every stated property of the kernel and flux map:
// root consistency, monotonicity of K and K xi^n, the derivative bracket,
// vector monotonicity, the Lipschitz bound, the potential sandwich, the
// finite-difference check of K', rotational equivariance of the flux and the
// derived exponent identities. Two-term laws additionally check the closed
// form K(xi) = 2/(1+sqrt(1+4 xi)) and the degeneracy envelope
// K(xi) sqrt(1+xi) in [0.5, 1.5].
std::vector<PropertyResult> law_property_suite(const GeneralizedPolynomial& law,
                                               std::uint64_t seed);

// Seeded random multi-term law (2 to 4 terms, exponents in (0, 4]).
GeneralizedPolynomial random_law(std::uint64_t seed);

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace forchfem
