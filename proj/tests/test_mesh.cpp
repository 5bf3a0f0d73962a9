#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "forchfem/mesh.hpp"

using namespace forchfem;

TEST_CASE("mesh: counts and area") {
    CHECK_THROWS_AS(unit_square_mesh(0), std::invalid_argument);

    const Mesh m1 = unit_square_mesh(1);
    CHECK(m1.triangles().size() == 2);
    CHECK(m1.vertices().size() == 4);
    CHECK(m1.boundary_facets().size() == 4);

    const Mesh m4 = unit_square_mesh(4);
    CHECK(m4.triangles().size() == 32);
    CHECK(m4.vertices().size() == 25);
    CHECK(m4.boundary_facets().size() == 16);

    for (const Mesh& m : {m1, m4}) {
        double area = 0.0;
        for (int t = 0; t < static_cast<int>(m.triangles().size()); ++t) {
            CHECK(m.signed_area(t) > 0.0);  // consistent CCW orientation
            area += m.signed_area(t);
        }
        CHECK(area == doctest::Approx(1.0).epsilon(1e-14));
    }

    CHECK(m4.max_diameter() == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-14));
}

TEST_CASE("mesh: conformity and Euler relation") {
    const Mesh m = unit_square_mesh(3);

    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : m.triangles()) {
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            ++edge_count[{a, b}];
        }
    }
    int boundary_edges = 0;
    for (const auto& [edge, count] : edge_count) {
        CHECK((count == 1 || count == 2));  // conforming: interior edges shared by 2
        if (count == 1) ++boundary_edges;
    }
    CHECK(boundary_edges == 12);

    const int v = static_cast<int>(m.vertices().size());
    const int e = static_cast<int>(edge_count.size());
    const int f = static_cast<int>(m.triangles().size());
    CHECK(v - e + f == 1);
}

TEST_CASE("mesh: boundary facets partition the boundary with outward normals") {
    for (int n : {1, 4}) {
        const Mesh m = unit_square_mesh(n);
        double total_length = 0.0;
        for (const BoundaryFacet& facet : m.boundary_facets()) {
            const Vec2 a = m.vertices()[facet.vertices[0]];
            const Vec2 b = m.vertices()[facet.vertices[1]];
            const double len = norm(b - a);
            CHECK(len == doctest::Approx(1.0 / n).epsilon(1e-14));
            total_length += len;

            // Axis-aligned unit normal pointing out of the square.
            CHECK(std::abs(norm(facet.normal) - 1.0) < 1e-15);
            const Vec2 mid = 0.5 * (a + b);
            const Vec2 outside = mid + 0.01 * facet.normal;
            CHECK((outside.x < 0.0 || outside.x > 1.0 || outside.y < 0.0 || outside.y > 1.0));

            // The owning triangle contains the facet's vertices.
            const auto& tri = m.triangles()[facet.triangle];
            const std::set<int> tri_verts(tri.begin(), tri.end());
            CHECK(tri_verts.count(facet.vertices[0]) == 1);
            CHECK(tri_verts.count(facet.vertices[1]) == 1);
        }
        CHECK(total_length == doctest::Approx(4.0).epsilon(1e-14));
    }

    // Normal on the edge x1 = 0 is (-1, 0).
    const Mesh m = unit_square_mesh(2);
    for (const BoundaryFacet& facet : m.boundary_facets()) {
        const Vec2 a = m.vertices()[facet.vertices[0]];
        const Vec2 b = m.vertices()[facet.vertices[1]];
        if (a.x == 0.0 && b.x == 0.0) {
            CHECK(facet.normal.x == -1.0);
            CHECK(facet.normal.y == 0.0);
        }
    }
}

TEST_CASE("mesh: quasi-uniformity across refinement") {
    for (int n : {1, 2, 8, 16}) {
        const Mesh m = unit_square_mesh(n);
        double dmin = 1e300, dmax = 0.0;
        for (int t = 0; t < static_cast<int>(m.triangles().size()); ++t) {
            dmin = std::min(dmin, m.diameter(t));
            dmax = std::max(dmax, m.diameter(t));
        }
        CHECK(dmax / dmin == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("mesh: plain-text dump") {
    const Mesh m = unit_square_mesh(1);
    std::ostringstream out;
    m.write_text(out);
    CHECK(out.str() ==
          "v 0 0\nv 1 0\nv 0 1\nv 1 1\nt 0 1 3\nt 0 3 2\n");
}
