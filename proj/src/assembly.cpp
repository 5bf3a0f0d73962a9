#include "forchfem/assembly.hpp"

#include <cmath>

namespace forchfem {

namespace {

int cell_count(const FESpace& space) {
    return static_cast<int>(space.mesh().triangles().size());
}

// Gradient of the field at tabulated point q of a cell, in physical coords.
Vec2 field_gradient(const FESpace::CellGeometry& geom, const ShapeTable& table,
                    std::span<const int> dofs, const std::vector<double>& coeffs, int q) {
    const Vec2* g = table.ref_grads_at(q);
    Vec2 ref{0.0, 0.0};
    for (int i = 0; i < table.dofs; ++i) ref = ref + coeffs[dofs[i]] * g[i];
    return geom.physical_gradient(ref);
}

}  // namespace

SparseMatrix mass_matrix(const FESpace& space) {
    const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
    const ShapeTable table = tabulate_shapes(space, rule);
    const int nd = table.dofs;

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(cell_count(space)) * nd * nd);
    for (int c = 0; c < cell_count(space); ++c) {
        const auto geom = space.cell_geometry(c);
        const auto dofs = space.cell_dofs(c);
        for (int q = 0; q < table.points; ++q) {
            const double w = rule.weights[q] * geom.det;
            const double* v = table.values_at(q);
            for (int i = 0; i < nd; ++i)
                for (int j = 0; j < nd; ++j)
                    triplets.push_back({dofs[i], dofs[j], w * v[i] * v[j]});
        }
    }
    return SparseMatrix::from_triplets(space.dof_count(), std::move(triplets), true);
}

SparseMatrix picard_matrix(const FESpace& space, const GeneralizedPolynomial& law,
                           const DensityField& frozen) {
    const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
    const ShapeTable table = tabulate_shapes(space, rule);
    const int nd = table.dofs;

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(cell_count(space)) * nd * nd);
    std::vector<Vec2> phys(nd);
    for (int c = 0; c < cell_count(space); ++c) {
        const auto geom = space.cell_geometry(c);
        const auto dofs = space.cell_dofs(c);
        for (int q = 0; q < table.points; ++q) {
            const Vec2 grad_u = field_gradient(geom, table, dofs, frozen.coeffs, q);
            const double k = kernel(law, norm(grad_u));
            const double w = rule.weights[q] * geom.det * k;
            const Vec2* g = table.ref_grads_at(q);
            for (int i = 0; i < nd; ++i) phys[i] = geom.physical_gradient(g[i]);
            for (int i = 0; i < nd; ++i)
                for (int j = 0; j < nd; ++j)
                    triplets.push_back({dofs[i], dofs[j], w * dot(phys[j], phys[i])});
        }
    }
    return SparseMatrix::from_triplets(space.dof_count(), std::move(triplets), true);
}

SparseMatrix tangent_matrix(const FESpace& space, const GeneralizedPolynomial& law,
                            const DensityField& state) {
    const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
    const ShapeTable table = tabulate_shapes(space, rule);
    const int nd = table.dofs;

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(cell_count(space)) * nd * nd);
    std::vector<Vec2> phys(nd);
    std::vector<double> du(nd);
    for (int c = 0; c < cell_count(space); ++c) {
        const auto geom = space.cell_geometry(c);
        const auto dofs = space.cell_dofs(c);
        for (int q = 0; q < table.points; ++q) {
            const Vec2 grad_u = field_gradient(geom, table, dofs, state.coeffs, q);
            const double xi = norm(grad_u);
            const double k = kernel(law, xi);
            const Vec2* g = table.ref_grads_at(q);
            for (int i = 0; i < nd; ++i) phys[i] = geom.physical_gradient(g[i]);
            const double w = rule.weights[q] * geom.det;
            // Rank-one contribution K'(xi)/xi (grad u . grad phi)^2; bounded
            // by |K'| xi |grad phi|^2, so it vanishes with xi.
            const double kp_over_xi = xi > 1e-14 ? kernel_derivative(law, xi) / xi : 0.0;
            for (int i = 0; i < nd; ++i) du[i] = dot(grad_u, phys[i]);
            for (int i = 0; i < nd; ++i)
                for (int j = 0; j < nd; ++j)
                    triplets.push_back({dofs[i], dofs[j],
                                        w * (k * dot(phys[j], phys[i]) +
                                             kp_over_xi * du[j] * du[i])});
        }
    }
    return SparseMatrix::from_triplets(space.dof_count(), std::move(triplets), true);
}

std::vector<double> stiffness_apply(const FESpace& space, const GeneralizedPolynomial& law,
                                    const DensityField& field) {
    const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
    const ShapeTable table = tabulate_shapes(space, rule);
    const int nd = table.dofs;

    std::vector<double> out(static_cast<std::size_t>(space.dof_count()), 0.0);
    for (int c = 0; c < cell_count(space); ++c) {
        const auto geom = space.cell_geometry(c);
        const auto dofs = space.cell_dofs(c);
        for (int q = 0; q < table.points; ++q) {
            const Vec2 grad_u = field_gradient(geom, table, dofs, field.coeffs, q);
            const double k = kernel(law, norm(grad_u));
            const Vec2 flux_q = k * grad_u;
            const double w = rule.weights[q] * geom.det;
            const Vec2* g = table.ref_grads_at(q);
            for (int i = 0; i < nd; ++i)
                out[dofs[i]] += w * dot(flux_q, geom.physical_gradient(g[i]));
        }
    }
    return out;
}

std::vector<double> volume_load(const FESpace& space,
                                const std::function<double(Vec2, double)>& f, double t) {
    const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
    const ShapeTable table = tabulate_shapes(space, rule);
    const int nd = table.dofs;

    std::vector<double> out(static_cast<std::size_t>(space.dof_count()), 0.0);
    for (int c = 0; c < cell_count(space); ++c) {
        const auto geom = space.cell_geometry(c);
        const auto dofs = space.cell_dofs(c);
        for (int q = 0; q < table.points; ++q) {
            const double w = rule.weights[q] * geom.det * f(geom.physical_point(rule.points[q]), t);
            const double* v = table.values_at(q);
            for (int i = 0; i < nd; ++i) out[dofs[i]] += w * v[i];
        }
    }
    return out;
}

std::vector<double> boundary_load(const FESpace& space,
                                  const std::function<double(Vec2, double)>& psi, double t) {
    // 4-point Gauss on each facet keeps the boundary consistency error of the
    // smooth non-polynomial flux data below the spatial discretization error.
    static const GaussLegendre gl = gauss_legendre_01(4);
    const int nd = space.dofs_per_cell();

    std::vector<double> out(static_cast<std::size_t>(space.dof_count()), 0.0);
    std::vector<double> vals(nd);
    for (const BoundaryFacet& facet : space.mesh().boundary_facets()) {
        const auto& tri = space.mesh().triangles()[facet.triangle];
        const auto dofs = space.cell_dofs(facet.triangle);
        int local_a = -1, local_b = -1;
        for (int i = 0; i < 3; ++i) {
            if (tri[i] == facet.vertices[0]) local_a = i;
            if (tri[i] == facet.vertices[1]) local_b = i;
        }
        const Vec2 pa = space.mesh().vertices()[facet.vertices[0]];
        const Vec2 pb = space.mesh().vertices()[facet.vertices[1]];
        const double length = norm(pb - pa);

        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
            const double s = gl.nodes[q];
            std::array<double, 3> bary{0.0, 0.0, 0.0};
            bary[local_a] = 1.0 - s;
            bary[local_b] = s;
            space.shape_values(bary, vals);
            const Vec2 x = pa + s * (pb - pa);
            const double w = gl.weights[q] * length * psi(x, t);
            for (int i = 0; i < nd; ++i) out[dofs[i]] += w * vals[i];
        }
    }
    return out;
}

}  // namespace forchfem
