#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "forchfem/mesh.hpp"
#include "forchfem/quadrature.hpp"
#include "forchfem/vec2.hpp"

namespace forchfem {

// Continuous Lagrange space of order r in {1, 2} over a structured unit
// square mesh. Degrees of freedom sit on the (rN+1) x (rN+1) nodal lattice,
// numbered lexicographically, which makes shared dofs on shared edges
// automatic. Immutable after construction.
class FESpace {
public:
    FESpace(Mesh mesh, int order);

    const Mesh& mesh() const { return mesh_; }
    int order() const { return order_; }
    int dof_count() const { return dof_count_; }
    int dofs_per_cell() const { return order_ == 1 ? 3 : 6; }
    std::span<const int> cell_dofs(int cell) const;
    std::span<const Vec2> dof_coords() const { return dof_coords_; }

    // Default quadrature degree for mass, load and nonlinear stiffness
    // integrands: the kernel factor is non-polynomial, so the rule
    // over-integrates the polynomial part.
    int default_quadrature_degree() const { return 2 * order_ + 2; }

    // Shape function values / reference gradients at a barycentric point.
    void shape_values(const std::array<double, 3>& bary, std::span<double> out) const;
    void shape_gradients_ref(const std::array<double, 3>& bary, std::span<Vec2> out) const;

    // Affine geometry of one triangle.
    struct CellGeometry {
        Vec2 p0, p1, p2;
        double det;  // 2 * area, positive
        // Rows of J^{-T}: physical gradient = (dot(inv_jt_row0, g_ref),
        //                                      dot(inv_jt_row1, g_ref)).
        Vec2 inv_jt_row0, inv_jt_row1;

        Vec2 physical_point(const std::array<double, 3>& bary) const {
            return bary[0] * p0 + bary[1] * p1 + bary[2] * p2;
        }
        Vec2 physical_gradient(const Vec2& ref_grad) const {
            return {dot(inv_jt_row0, ref_grad), dot(inv_jt_row1, ref_grad)};
        }
    };
    CellGeometry cell_geometry(int cell) const;

private:
    Mesh mesh_;
    int order_;
    int dof_count_;
    std::vector<int> cell_dofs_;  // dofs_per_cell() entries per cell
    std::vector<Vec2> dof_coords_;
};

FESpace build_space(Mesh mesh, int order);

// Coefficient vector of a density field at one time level.
struct DensityField {
    const FESpace* space = nullptr;
    std::vector<double> coeffs;
};

DensityField make_field(const FESpace& space, double value = 0.0);

// Nodal interpolant (coefficients = function values at dof coordinates).
DensityField interpolate(const FESpace& space, const std::function<double(Vec2)>& w);

struct FieldSample {
    double value;
    Vec2 gradient;
};

// Value and physical gradient of a field at a barycentric point of a cell.
FieldSample evaluate(const DensityField& field, int cell, const std::array<double, 3>& bary);

// L2-projection onto the space: solves the mass system M c = b with
// b_i = (w, phi_i), so that (pi w - w, v_h) = 0 for all v_h up to the linear
// solver tolerance of 1e-12.
DensityField l2_project(const FESpace& space, const std::function<double(Vec2)>& w);

// Shape values and reference gradients tabulated at the points of a rule;
// shared by assembly and norm evaluation loops.
struct ShapeTable {
    int points = 0;
    int dofs = 0;
    std::vector<double> values;   // points x dofs
    std::vector<Vec2> ref_grads;  // points x dofs

    const double* values_at(int q) const { return values.data() + q * dofs; }
    const Vec2* ref_grads_at(int q) const { return ref_grads.data() + q * dofs; }
};

ShapeTable tabulate_shapes(const FESpace& space, const QuadratureRule& rule);

}  // namespace forchfem
