#include "forchfem/fespace.hpp"

#include <cmath>
#include <stdexcept>

#include "forchfem/assembly.hpp"
#include "forchfem/solver.hpp"

namespace forchfem {

FESpace::FESpace(Mesh mesh, int order) : mesh_(std::move(mesh)), order_(order) {
    if (order_ != 1 && order_ != 2)
        throw std::invalid_argument("fespace: only orders 1 and 2 are supported");

    const int n = mesh_.subdivisions();
    const int m = order_ * n;  // nodal lattice subdivisions per side
    dof_count_ = (m + 1) * (m + 1);

    dof_coords_.resize(dof_count_);
    for (int l = 0; l <= m; ++l)
        for (int k = 0; k <= m; ++k)
            dof_coords_[l * (m + 1) + k] = {static_cast<double>(k) / m,
                                            static_cast<double>(l) / m};

    const auto lattice_id = [m](const Vec2& p) {
        const int k = static_cast<int>(std::lround(p.x * m));
        const int l = static_cast<int>(std::lround(p.y * m));
        return l * (m + 1) + k;
    };

    const int per_cell = dofs_per_cell();
    cell_dofs_.resize(static_cast<std::size_t>(per_cell) * mesh_.triangles().size());
    for (std::size_t c = 0; c < mesh_.triangles().size(); ++c) {
        const auto& tri = mesh_.triangles()[c];
        const Vec2 p0 = mesh_.vertices()[tri[0]];
        const Vec2 p1 = mesh_.vertices()[tri[1]];
        const Vec2 p2 = mesh_.vertices()[tri[2]];
        int* dofs = cell_dofs_.data() + c * per_cell;
        dofs[0] = lattice_id(p0);
        dofs[1] = lattice_id(p1);
        dofs[2] = lattice_id(p2);
        if (order_ == 2) {
            dofs[3] = lattice_id(0.5 * (p1 + p2));
            dofs[4] = lattice_id(0.5 * (p0 + p2));
            dofs[5] = lattice_id(0.5 * (p0 + p1));
        }
    }
}

std::span<const int> FESpace::cell_dofs(int cell) const {
    const int per_cell = dofs_per_cell();
    return {cell_dofs_.data() + static_cast<std::size_t>(cell) * per_cell,
            static_cast<std::size_t>(per_cell)};
}

void FESpace::shape_values(const std::array<double, 3>& b, std::span<double> out) const {
    if (order_ == 1) {
        out[0] = b[0];
        out[1] = b[1];
        out[2] = b[2];
        return;
    }
    out[0] = b[0] * (2.0 * b[0] - 1.0);
    out[1] = b[1] * (2.0 * b[1] - 1.0);
    out[2] = b[2] * (2.0 * b[2] - 1.0);
    out[3] = 4.0 * b[1] * b[2];
    out[4] = 4.0 * b[0] * b[2];
    out[5] = 4.0 * b[0] * b[1];
}

void FESpace::shape_gradients_ref(const std::array<double, 3>& b, std::span<Vec2> out) const {
    // Reference barycentric gradients: d(1-x-y) = (-1,-1), dx = (1,0), dy = (0,1).
    static constexpr Vec2 dl[3] = {{-1.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};
    if (order_ == 1) {
        out[0] = dl[0];
        out[1] = dl[1];
        out[2] = dl[2];
        return;
    }
    for (int i = 0; i < 3; ++i) out[i] = (4.0 * b[i] - 1.0) * dl[i];
    out[3] = 4.0 * (b[1] * dl[2] + b[2] * dl[1]);
    out[4] = 4.0 * (b[0] * dl[2] + b[2] * dl[0]);
    out[5] = 4.0 * (b[0] * dl[1] + b[1] * dl[0]);
}

FESpace::CellGeometry FESpace::cell_geometry(int cell) const {
    const auto& tri = mesh_.triangles()[cell];
    CellGeometry g;
    g.p0 = mesh_.vertices()[tri[0]];
    g.p1 = mesh_.vertices()[tri[1]];
    g.p2 = mesh_.vertices()[tri[2]];
    const double j00 = g.p1.x - g.p0.x, j01 = g.p2.x - g.p0.x;
    const double j10 = g.p1.y - g.p0.y, j11 = g.p2.y - g.p0.y;
    g.det = j00 * j11 - j01 * j10;
    g.inv_jt_row0 = {j11 / g.det, -j10 / g.det};
    g.inv_jt_row1 = {-j01 / g.det, j00 / g.det};
    return g;
}

FESpace build_space(Mesh mesh, int order) { return FESpace(std::move(mesh), order); }

DensityField make_field(const FESpace& space, double value) {
    return {&space, std::vector<double>(static_cast<std::size_t>(space.dof_count()), value)};
}

DensityField interpolate(const FESpace& space, const std::function<double(Vec2)>& w) {
    DensityField f = make_field(space);
    for (int i = 0; i < space.dof_count(); ++i) f.coeffs[i] = w(space.dof_coords()[i]);
    return f;
}

FieldSample evaluate(const DensityField& field, int cell, const std::array<double, 3>& bary) {
    const FESpace& space = *field.space;
    const int nd = space.dofs_per_cell();
    double vals[6];
    Vec2 grads[6];
    space.shape_values(bary, {vals, static_cast<std::size_t>(nd)});
    space.shape_gradients_ref(bary, {grads, static_cast<std::size_t>(nd)});
    const auto geom = space.cell_geometry(cell);
    const auto dofs = space.cell_dofs(cell);

    FieldSample s{0.0, {0.0, 0.0}};
    Vec2 ref_grad{0.0, 0.0};
    for (int i = 0; i < nd; ++i) {
        const double c = field.coeffs[dofs[i]];
        s.value += c * vals[i];
        ref_grad = ref_grad + c * grads[i];
    }
    s.gradient = geom.physical_gradient(ref_grad);
    return s;
}

DensityField l2_project(const FESpace& space, const std::function<double(Vec2)>& w) {
    const SparseMatrix m = mass_matrix(space);
    const std::vector<double> b =
        volume_load(space, [&w](Vec2 x, double) { return w(x); }, 0.0);
    DensityField result = make_field(space);
    result.coeffs = linear_solve(m, b, 1e-12);
    return result;
}

ShapeTable tabulate_shapes(const FESpace& space, const QuadratureRule& rule) {
    ShapeTable table;
    table.points = static_cast<int>(rule.points.size());
    table.dofs = space.dofs_per_cell();
    table.values.resize(static_cast<std::size_t>(table.points) * table.dofs);
    table.ref_grads.resize(static_cast<std::size_t>(table.points) * table.dofs);
    for (int q = 0; q < table.points; ++q) {
        space.shape_values(rule.points[q],
                           {table.values.data() + q * table.dofs,
                            static_cast<std::size_t>(table.dofs)});
        space.shape_gradients_ref(rule.points[q],
                                  {table.ref_grads.data() + q * table.dofs,
                                   static_cast<std::size_t>(table.dofs)});
    }
    return table;
}

}  // namespace forchfem
