#include "forchfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace forchfem {

double Mesh::signed_area(int triangle) const {
    const auto& t = triangles_[triangle];
    const Vec2 a = vertices_[t[0]];
    const Vec2 b = vertices_[t[1]];
    const Vec2 c = vertices_[t[2]];
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double Mesh::diameter(int triangle) const {
    const auto& t = triangles_[triangle];
    double d = 0.0;
    for (int e = 0; e < 3; ++e)
        d = std::max(d, norm(vertices_[t[(e + 1) % 3]] - vertices_[t[e]]));
    return d;
}

double Mesh::max_diameter() const {
    double h = 0.0;
    for (int t = 0; t < static_cast<int>(triangles_.size()); ++t)
        h = std::max(h, diameter(t));
    return h;
}

void Mesh::write_text(std::ostream& out) const {
    for (const Vec2& v : vertices_) out << "v " << v.x << " " << v.y << "\n";
    for (const auto& t : triangles_) out << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

Mesh unit_square_mesh(int n) {
    if (n < 1) throw std::invalid_argument("mesh: subdivision count must be >= 1");

    Mesh mesh;
    mesh.n_ = n;

    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };

    mesh.vertices_.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices_.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});

    // Cell (i,j) splits along the diagonal v00-v11; both triangles CCW.
    mesh.triangles_.reserve(static_cast<std::size_t>(2 * n * n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = vid(i, j), v10 = vid(i + 1, j);
            const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles_.push_back({v00, v10, v11});  // lower
            mesh.triangles_.push_back({v00, v11, v01});  // upper
        }
    }

    const auto cell_lower = [n](int i, int j) { return 2 * (j * n + i); };
    const auto cell_upper = [n](int i, int j) { return 2 * (j * n + i) + 1; };

    mesh.facets_.reserve(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < n; ++i)  // bottom, x2 = 0
        mesh.facets_.push_back({{vid(i, 0), vid(i + 1, 0)}, cell_lower(i, 0), {0.0, -1.0}});
    for (int j = 0; j < n; ++j)  // right, x1 = 1
        mesh.facets_.push_back({{vid(n, j), vid(n, j + 1)}, cell_lower(n - 1, j), {1.0, 0.0}});
    for (int i = 0; i < n; ++i)  // top, x2 = 1
        mesh.facets_.push_back({{vid(i + 1, n), vid(i, n)}, cell_upper(i, n - 1), {0.0, 1.0}});
    for (int j = 0; j < n; ++j)  // left, x1 = 0
        mesh.facets_.push_back({{vid(0, j + 1), vid(0, j)}, cell_upper(0, j), {-1.0, 0.0}});

    return mesh;
}

}  // namespace forchfem
