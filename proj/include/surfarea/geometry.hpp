#pragma once

#include <array>
#include <cmath>

namespace surfarea {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Flat area of a triangle in 3-space (half the cross-product norm).
double triangle_area3(const Point3& p0, const Point3& p1, const Point3& p2);

/// Per-triangle shape data.  Vertices are stored counterclockwise;
/// edge_lengths[i] is the edge opposite vertices[i].
struct TriangleGeom {
    std::array<Point2, 3> vertices;
    std::array<double, 3> edge_lengths;
    double area = 0.0;          // unsigned, > 0
    double diameter = 0.0;      // longest edge
    double circumradius = 0.0;  // |e1||e2||e3| / (4 area)
    double min_angle = 0.0;
    double max_angle = 0.0;
};

/// Computes all TriangleGeom fields.  The input orientation may be either;
/// vertices are reordered to counterclockwise.  Throws DegenerateTriangle
/// when |signed area| < 1e-14 * diameter^2.
TriangleGeom triangle_geom(Point2 p0, Point2 p1, Point2 p2);

/// Similarity (+ optional mirror) mapping the normalized triangle onto an
/// arbitrary one.  apply() maps a point of the normalized plane to the
/// original plane: translation + scale * Rot(rotation) * Mirror.
struct ShapeTransform {
    double s = 0.0;  // cos of the apex angle at the normalized origin vertex
    double t = 1.0;  // sin of that angle, > 0
    double scale = 1.0;
    double rotation = 0.0;
    Point2 translation;
    bool mirrored = false;

    Point2 apply(Point2 p) const {
        const double yy = mirrored ? -p.y : p.y;
        const double c = std::cos(rotation), sn = std::sin(rotation);
        return {translation.x + scale * (c * p.x - sn * yy),
                translation.y + scale * (sn * p.x + c * yy)};
    }
};

struct NormalizedTriangle {
    ShapeTransform transform;
    double alpha = 1.0;  // ratio shortest/middle edge, in (0, 1]

    /// Vertices of the normalized triangle: (0,0), (1,0), (alpha*s, alpha*t).
    std::array<Point2, 3> reference_vertices() const {
        return {Point2{0.0, 0.0}, Point2{1.0, 0.0},
                Point2{alpha * transform.s, alpha * transform.t}};
    }
};

/// Normalizes a triangle to the canonical shape with the middle edge mapped
/// to the unit segment (0,0)-(1,0) and the shortest edge of relative length
/// alpha <= 1 ending at (alpha*s, alpha*t), t > 0.  The returned transform
/// carries the canonical vertices back onto the input triangle (as a vertex
/// set; labels may be permuted).
NormalizedTriangle normalize_to_ktilde(const TriangleGeom& tri);

}  // namespace surfarea
