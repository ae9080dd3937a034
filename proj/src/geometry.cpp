#include "surfarea/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "surfarea/errors.hpp"

namespace surfarea {

double triangle_area3(const Point3& p0, const Point3& p1, const Point3& p2) {
    const double ux = p1.x - p0.x, uy = p1.y - p0.y, uz = p1.z - p0.z;
    const double vx = p2.x - p0.x, vy = p2.y - p0.y, vz = p2.z - p0.z;
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

namespace {

double inner_angle(Point2 at, Point2 b, Point2 c) {
    // atan2 of cross/dot keeps full accuracy on thin triangles, where
    // acos of a near-unit cosine loses half the digits.
    const Vec2 u = b - at;
    const Vec2 v = c - at;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

TriangleGeom triangle_geom(Point2 p0, Point2 p1, Point2 p2) {
    for (const Point2& p : {p0, p1, p2}) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidParameter("triangle_geom: non-finite vertex coordinate");
    }

    double signed2 = cross(p1 - p0, p2 - p0);  // twice the signed area
    TriangleGeom g;
    g.vertices = {p0, p1, p2};
    if (signed2 < 0.0) {
        std::swap(g.vertices[1], g.vertices[2]);
        signed2 = -signed2;
    }

    for (int i = 0; i < 3; ++i)
        g.edge_lengths[i] = distance(g.vertices[(i + 1) % 3], g.vertices[(i + 2) % 3]);
    g.diameter = std::max({g.edge_lengths[0], g.edge_lengths[1], g.edge_lengths[2]});

    if (signed2 < 2e-14 * g.diameter * g.diameter)
        throw DegenerateTriangle("triangle_geom: (near-)collinear vertices");

    g.area = 0.5 * signed2;
    // Product-of-edges circumradius formula; it stays well behaved for
    // obtuse triangles where the circumcenter lies far outside.
    g.circumradius = g.edge_lengths[0] * g.edge_lengths[1] * g.edge_lengths[2] / (4.0 * g.area);

    double amin = 4.0, amax = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double a = inner_angle(g.vertices[i], g.vertices[(i + 1) % 3], g.vertices[(i + 2) % 3]);
        amin = std::min(amin, a);
        amax = std::max(amax, a);
    }
    g.min_angle = amin;
    g.max_angle = amax;
    return g;
}

NormalizedTriangle normalize_to_ktilde(const TriangleGeom& tri) {
    // Rank the edges; ties broken by index so the labeling is deterministic.
    std::array<int, 3> idx = {0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return tri.edge_lengths[a] < tri.edge_lengths[b];
    });
    const int i_short = idx[0], i_mid = idx[1], i_long = idx[2];

    // Vertex opposite the longest edge goes to the origin, the one opposite
    // the shortest edge to (1,0); the segment between them is the middle
    // edge and sets the scale.
    const Point2 A = tri.vertices[i_long];
    const Point2 B = tri.vertices[i_short];
    const Point2 C = tri.vertices[i_mid];

    NormalizedTriangle out;
    ShapeTransform& tf = out.transform;
    tf.translation = A;
    tf.scale = tri.edge_lengths[i_mid];
    const Vec2 u = B - A;
    tf.rotation = std::atan2(u.y, u.x);

    // Coordinates of the remaining vertex in the normalized frame.
    const Vec2 w = C - A;
    const double wx = dot(u, w) / (tf.scale * tf.scale);
    double wy = cross(u, w) / (tf.scale * tf.scale);
    tf.mirrored = wy < 0.0;
    if (tf.mirrored) wy = -wy;

    const double d = std::hypot(wx, wy);
    if (d <= 0.0) throw DegenerateTriangle("normalize_to_ktilde: collapsed triangle");
    out.alpha = d;
    tf.s = wx / d;
    tf.t = wy / d;
    return out;
}

}  // namespace surfarea
