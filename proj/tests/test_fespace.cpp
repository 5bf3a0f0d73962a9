#include <doctest.h>

#include <cmath>
#include <numbers>

#include "forchfem/analysis.hpp"
#include "forchfem/fespace.hpp"
#include "forchfem/rng.hpp"

using namespace forchfem;

TEST_CASE("fespace: dof counts") {
    CHECK_THROWS_AS(build_space(unit_square_mesh(1), 3), std::invalid_argument);

    CHECK(build_space(unit_square_mesh(1), 1).dof_count() == 4);
    CHECK(build_space(unit_square_mesh(1), 2).dof_count() == 9);
    CHECK(build_space(unit_square_mesh(4), 2).dof_count() == 81);
    CHECK(build_space(unit_square_mesh(4), 1).dof_count() == 25);
}

TEST_CASE("fespace: every dof is referenced by some cell") {
    for (int r : {1, 2}) {
        const FESpace space = build_space(unit_square_mesh(3), r);
        std::vector<bool> seen(space.dof_count(), false);
        for (std::size_t c = 0; c < space.mesh().triangles().size(); ++c)
            for (int dof : space.cell_dofs(static_cast<int>(c))) {
                CHECK(dof >= 0);
                CHECK(dof < space.dof_count());
                seen[dof] = true;
            }
        for (bool s : seen) CHECK(s);
    }
}

TEST_CASE("fespace: partition of unity at quadrature points") {
    for (int r : {1, 2}) {
        const FESpace space = build_space(unit_square_mesh(2), r);
        const QuadratureRule rule = quadrature_rule(space.default_quadrature_degree());
        std::vector<double> vals(space.dofs_per_cell());
        for (const auto& bary : rule.points) {
            space.shape_values(bary, vals);
            double sum = 0.0;
            for (double v : vals) sum += v;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("fespace: field evaluation reproduces polynomials") {
    // Constant field: value c, zero gradient.
    {
        const FESpace space = build_space(unit_square_mesh(2), 1);
        const DensityField f = make_field(space, 3.25);
        const FieldSample s = evaluate(f, 3, {0.2, 0.5, 0.3});
        CHECK(s.value == doctest::Approx(3.25).epsilon(1e-14));
        CHECK(std::abs(s.gradient.x) < 1e-13);
        CHECK(std::abs(s.gradient.y) < 1e-13);
    }
    // Linear reproduction with r=1: interpolant of x1 has gradient (1,0).
    {
        const FESpace space = build_space(unit_square_mesh(3), 1);
        const DensityField f = interpolate(space, [](Vec2 p) { return p.x; });
        for (int c = 0; c < 6; ++c) {
            const FieldSample s = evaluate(f, c, {1.0 / 3, 1.0 / 3, 1.0 / 3});
            CHECK(s.gradient.x == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(std::abs(s.gradient.y) < 1e-13);
        }
    }
    // Quadratic reproduction with r=2: interpolant of x1 x2 has gradient
    // (x2, x1) at element centroids.
    {
        const FESpace space = build_space(unit_square_mesh(2), 2);
        const DensityField f = interpolate(space, [](Vec2 p) { return p.x * p.y; });
        for (std::size_t c = 0; c < space.mesh().triangles().size(); ++c) {
            const std::array<double, 3> centroid{1.0 / 3, 1.0 / 3, 1.0 / 3};
            const FieldSample s = evaluate(f, static_cast<int>(c), centroid);
            const Vec2 x = space.cell_geometry(static_cast<int>(c)).physical_point(centroid);
            CHECK(s.gradient.x == doctest::Approx(x.y).epsilon(1e-12));
            CHECK(s.gradient.y == doctest::Approx(x.x).epsilon(1e-12));
            CHECK(s.value == doctest::Approx(x.x * x.y).epsilon(1e-12));
        }
    }
}

TEST_CASE("fespace: L2 projection basics") {
    // Constants project to themselves.
    {
        const FESpace space = build_space(unit_square_mesh(2), 2);
        const DensityField p = l2_project(space, [](Vec2) { return 2.5; });
        for (double c : p.coeffs) CHECK(c == doctest::Approx(2.5).epsilon(1e-10));
    }
    // w = x1 lies in the r=1 space: projection equals the interpolant.
    {
        const FESpace space = build_space(unit_square_mesh(3), 1);
        const DensityField p = l2_project(space, [](Vec2 x) { return x.x; });
        for (int i = 0; i < space.dof_count(); ++i)
            CHECK(p.coeffs[i] == doctest::Approx(space.dof_coords()[i].x).epsilon(1e-10));
    }
}

TEST_CASE("fespace: projection idempotence and stability") {
    const FESpace space = build_space(unit_square_mesh(4), 2);
    const auto w = [](Vec2 p) {
        return std::sin(std::numbers::pi * p.x) * std::sin(std::numbers::pi * p.y);
    };
    const DensityField pw = l2_project(space, w);

    // Projecting a member of the space returns it: evaluate pw pointwise by
    // locating the containing cell.
    const DensityField again = l2_project(space, [&](Vec2 p) {
        const int n = space.mesh().subdivisions();
        const double cx = std::min(p.x * n, n - 1e-12);
        const double cy = std::min(p.y * n, n - 1e-12);
        const int i = static_cast<int>(cx), j = static_cast<int>(cy);
        const double fx = cx - i, fy = cy - j;
        const int cell = 2 * (j * n + i) + (fy > fx ? 1 : 0);
        const auto geom = space.cell_geometry(cell);
        // barycentric coordinates of p in that cell
        const Vec2 a = geom.p0, b = geom.p1, c = geom.p2;
        const double d = (b.y - c.y) * (a.x - c.x) + (c.x - b.x) * (a.y - c.y);
        const double l0 = ((b.y - c.y) * (p.x - c.x) + (c.x - b.x) * (p.y - c.y)) / d;
        const double l1 = ((c.y - a.y) * (p.x - c.x) + (a.x - c.x) * (p.y - c.y)) / d;
        return evaluate(pw, cell, {l0, l1, 1.0 - l0 - l1}).value;
    });
    for (int i = 0; i < space.dof_count(); ++i)
        CHECK(again.coeffs[i] == doctest::Approx(pw.coeffs[i]).epsilon(5e-9));

    // Stability of the projection in L2.
    const double norm_pw = lq_norm(pw, 2.0);
    const double norm_w = 0.5;  // |sin sin|_{L2} on the unit square
    CHECK(norm_pw <= norm_w + 1e-10);

    // Random smooth functions.
    Rng rng(5);
    for (int k = 0; k < 3; ++k) {
        const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
        const auto g = [&](Vec2 p) { return a * std::cos(p.x + b) + b * p.y * p.x; };
        const DensityField pg = l2_project(space, g);
        const QuadratureRule rule = quadrature_rule(10);
        double l2g = 0.0;
        for (std::size_t c = 0; c < space.mesh().triangles().size(); ++c) {
            const auto geom = space.cell_geometry(static_cast<int>(c));
            for (std::size_t q = 0; q < rule.points.size(); ++q) {
                const double v = g(geom.physical_point(rule.points[q]));
                l2g += rule.weights[q] * geom.det * v * v;
            }
        }
        CHECK(lq_norm(pg, 2.0) <= std::sqrt(l2g) + 1e-10);
    }
}

TEST_CASE("fespace: projection error order is r+1 for sin-sin") {
    // The projection error approaches the r+1 slope from below on this mesh;
    // the finest doubling is the order estimate.
    for (int r : {1, 2}) {
        std::vector<double> errors;
        for (int n : {16, 32}) {
            const FESpace space = build_space(unit_square_mesh(n), r);
            const auto w = [](Vec2 p) {
                return std::sin(std::numbers::pi * p.x) * std::sin(std::numbers::pi * p.y);
            };
            const DensityField pw = l2_project(space, w);
            errors.push_back(lq_error_norm(pw, w, 2.0));
        }
        const double order = std::log2(errors[0] / errors[1]);
        CHECK(order >= r + 1 - 0.1);
    }
}
