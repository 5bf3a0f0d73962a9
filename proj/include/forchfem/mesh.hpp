#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "forchfem/vec2.hpp"

namespace forchfem {

// One boundary edge of a triangle lying on the domain boundary.
struct BoundaryFacet {
    std::array<int, 2> vertices;  // global vertex indices, ordered along the edge
    int triangle;                 // owning triangle index
    Vec2 normal;                  // outward unit normal
};

// Conforming triangulation of the unit square: N x N cells, each split into
// two right triangles along the lower-left to upper-right diagonal. Vertices
// are ordered lexicographically by (row, column); all triangles are
// counter-clockwise. Immutable after construction.
class Mesh {
public:
    int subdivisions() const { return n_; }
    std::span<const Vec2> vertices() const { return vertices_; }
    std::span<const std::array<int, 3>> triangles() const { return triangles_; }
    std::span<const BoundaryFacet> boundary_facets() const { return facets_; }

    double signed_area(int triangle) const;
    double diameter(int triangle) const;
    double max_diameter() const;  // h

    // Plain-text dump: "v x y" per vertex, then "t i j k" per triangle.
    void write_text(std::ostream& out) const;

    friend Mesh unit_square_mesh(int n);

private:
    int n_ = 0;
    std::vector<Vec2> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<BoundaryFacet> facets_;
};

// Builds the structured unit-square triangulation: 2N^2 triangles, (N+1)^2
// vertices, 4N boundary facets. Throws std::invalid_argument for N < 1.
Mesh unit_square_mesh(int n);

}  // namespace forchfem
