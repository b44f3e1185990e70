#ifndef BRAIDSTAB_GEOMETRY_HPP
#define BRAIDSTAB_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace braidstab {

enum class Surface { Disk, Torus };

std::string surface_name(Surface s);
Surface surface_from_name(const std::string& name);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    double norm() const { return std::hypot(x, y); }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// 2x2 real matrix, row major.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 rotation(double angle) {
        const double co = std::cos(angle), si = std::sin(angle);
        return {co, -si, si, co};
    }

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Mat2 inverse() const {
        const double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

// Eigenvalues of a real 2x2 matrix as two complex numbers (re, im).
struct ComplexPair {
    double re1 = 0.0, im1 = 0.0;
    double re2 = 0.0, im2 = 0.0;
};

ComplexPair eigenvalues_2x2(const Mat2& m);

// A point on the working surface. Coordinates are kept on the universal
// cover ("lift"); reduced() maps torus lifts back to [0,1)^2. On the disk
// the lift and the representative coincide.
struct SurfacePoint {
    Vec2 lift;

    SurfacePoint() = default;
    SurfacePoint(double x, double y) : lift{x, y} {}
    explicit SurfacePoint(const Vec2& v) : lift(v) {}

    double x() const { return lift.x; }
    double y() const { return lift.y; }

    Vec2 reduced(Surface s) const {
        if (s == Surface::Disk) return lift;
        double rx = lift.x - std::floor(lift.x);
        double ry = lift.y - std::floor(lift.y);
        if (rx >= 1.0) rx = 0.0;  // guard against floor rounding at the seam
        if (ry >= 1.0) ry = 0.0;
        return {rx, ry};
    }
};

// Distance between reduced representatives; on the torus the shortest
// displacement over the lattice of translates.
double surface_distance(Surface s, const SurfacePoint& p, const SurfacePoint& q);

// Checks that a point is admissible for the given surface (disk: r <= 1 + tol).
bool point_on_surface(Surface s, const SurfacePoint& p, double tol = 1e-9);

} // namespace braidstab

#endif
