#pragma once

#include <functional>
#include <vector>

#include "forchfem/fespace.hpp"
#include "forchfem/law.hpp"
#include "forchfem/sparse.hpp"

namespace forchfem {

// Discrete operators of the backward Euler / Galerkin scheme. All loops run
// sequentially in element index order, so repeated assembly of identical
// inputs is bitwise reproducible.

// M_ij = (phi_j, phi_i); symmetric positive definite.
SparseMatrix mass_matrix(const FESpace& space);

// A_ij = (K(|grad rho*|) grad phi_j, grad phi_i) with the kernel frozen at
// the given field; symmetric positive semidefinite with kernel = constants.
SparseMatrix picard_matrix(const FESpace& space, const GeneralizedPolynomial& law,
                           const DensityField& frozen);

// Newton linearization: the Picard integrand plus the rank-one term
// K'(xi)/xi (grad u . grad phi_j)(grad u . grad phi_i); remains SPD on the
// complement of constants since K + K' xi >= (1-a) K > 0.
SparseMatrix tangent_matrix(const FESpace& space, const GeneralizedPolynomial& law,
                            const DensityField& state);

// Entries (K(|grad u|) grad u, grad phi_i), same quadrature points as
// picard_matrix, so stiffness_apply(u) == picard_matrix(u) * u up to rounding.
std::vector<double> stiffness_apply(const FESpace& space, const GeneralizedPolynomial& law,
                                    const DensityField& field);

// b_i = (f(., t), phi_i).
std::vector<double> volume_load(const FESpace& space,
                                const std::function<double(Vec2, double)>& f, double t);

// c_i = <psi(., t), phi_i> via 4-point Gauss quadrature per boundary facet.
// Enters the residual with a minus sign per the weak form.
std::vector<double> boundary_load(const FESpace& space,
                                  const std::function<double(Vec2, double)>& psi, double t);

}  // namespace forchfem
