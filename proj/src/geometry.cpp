#include "braidstab/geometry.hpp"

#include <algorithm>

namespace braidstab {

std::string surface_name(Surface s) {
    return s == Surface::Disk ? "disk" : "torus";
}

Surface surface_from_name(const std::string& name) {
    if (name == "disk") return Surface::Disk;
    if (name == "torus") return Surface::Torus;
    throw std::invalid_argument("unknown surface: " + name);
}

ComplexPair eigenvalues_2x2(const Mat2& m) {
    const double tr = m.trace();
    const double disc = tr * tr - 4.0 * m.det();
    ComplexPair out;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        out.re1 = 0.5 * (tr + s);
        out.re2 = 0.5 * (tr - s);
    } else {
        const double s = std::sqrt(-disc);
        out.re1 = out.re2 = 0.5 * tr;
        out.im1 = 0.5 * s;
        out.im2 = -0.5 * s;
    }
    return out;
}

double surface_distance(Surface s, const SurfacePoint& p, const SurfacePoint& q) {
    if (s == Surface::Disk) return (p.lift - q.lift).norm();
    Vec2 d = p.reduced(s) - q.reduced(s);
    double dx = std::abs(d.x - std::round(d.x));
    double dy = std::abs(d.y - std::round(d.y));
    return std::hypot(dx, dy);
}

bool point_on_surface(Surface s, const SurfacePoint& p, double tol) {
    if (s == Surface::Torus) return true;
    return p.lift.x * p.lift.x + p.lift.y * p.lift.y <= 1.0 + tol;
}

} // namespace braidstab
