#include "braidstab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "braidstab/errors.hpp"

namespace braidstab {

TimePeriodicHamiltonian::TimePeriodicHamiltonian(Surface surface, Evaluator eval,
                                                 Normalization norm, Gradient grad)
    : surface_(surface), eval_(std::move(eval)), grad_(std::move(grad)), norm_(norm) {}

double TimePeriodicHamiltonian::reduce_time(double t) {
    double r = t - std::floor(t);
    if (r >= 1.0) r = 0.0;
    return r;
}

double TimePeriodicHamiltonian::value(double t, const SurfacePoint& p) const {
    return eval_(reduce_time(t), p.lift.x, p.lift.y);
}

Vec2 TimePeriodicHamiltonian::gradient(double t, const SurfacePoint& p) const {
    const double tr = reduce_time(t);
    if (grad_) return grad_(tr, p.lift.x, p.lift.y);
    // 4th-order central differences
    const double h = h_grad_;
    const double x = p.lift.x, y = p.lift.y;
    const double gx = (-eval_(tr, x + 2 * h, y) + 8 * eval_(tr, x + h, y)
                       - 8 * eval_(tr, x - h, y) + eval_(tr, x - 2 * h, y)) / (12 * h);
    const double gy = (-eval_(tr, x, y + 2 * h) + 8 * eval_(tr, x, y + h)
                       - 8 * eval_(tr, x, y - h) + eval_(tr, x, y - 2 * h)) / (12 * h);
    return {gx, gy};
}

Mat2 TimePeriodicHamiltonian::hessian(double t, const SurfacePoint& p) const {
    // central differences of the gradient; adequate for variational equations
    const double h = 1e-5;
    const Vec2 gxp = gradient(t, SurfacePoint(p.lift.x + h, p.lift.y));
    const Vec2 gxm = gradient(t, SurfacePoint(p.lift.x - h, p.lift.y));
    const Vec2 gyp = gradient(t, SurfacePoint(p.lift.x, p.lift.y + h));
    const Vec2 gym = gradient(t, SurfacePoint(p.lift.x, p.lift.y - h));
    const double hxx = (gxp.x - gxm.x) / (2 * h);
    const double hxy = (gyp.x - gym.x) / (2 * h);
    const double hyx = (gxp.y - gxm.y) / (2 * h);
    const double hyy = (gyp.y - gym.y) / (2 * h);
    return {hxx, hxy, hyx, hyy};
}

Vec2 hamiltonian_vector_field(const TimePeriodicHamiltonian& H, double t, const SurfacePoint& p) {
    const Vec2 g = H.gradient(t, p);
    if (!std::isfinite(g.x) || !std::isfinite(g.y)) {
        throw NumericDomainError("non-finite Hamiltonian gradient at t=" + std::to_string(t));
    }
    return {g.y, -g.x};
}

namespace {

struct SpaceGrid {
    std::vector<Vec2> pts;
    double spacing = 0.0;
};

SpaceGrid make_space_grid(Surface s, int n) {
    SpaceGrid g;
    if (s == Surface::Torus) {
        g.spacing = 1.0 / n;
        g.pts.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g.pts.push_back({i * g.spacing, j * g.spacing});
    } else {
        // uniform grid over [-1,1]^2 clipped to the closed disk
        g.spacing = 2.0 / (n - 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec2 p{-1.0 + i * g.spacing, -1.0 + j * g.spacing};
                if (p.x * p.x + p.y * p.y <= 1.0 + 1e-12) g.pts.push_back(p);
            }
    }
    return g;
}

// one refinement pass: rescan a spacing-sized neighbourhood of the best grid
// node at 8x resolution, staying on the surface
double refine_extremum(const TimePeriodicHamiltonian& F, double t, Vec2 at, double spacing,
                       bool want_max) {
    double best = F.value(t, SurfacePoint(at));
    const int sub = 8;
    for (int i = -sub; i <= sub; ++i) {
        for (int j = -sub; j <= sub; ++j) {
            Vec2 q{at.x + i * spacing / sub, at.y + j * spacing / sub};
            if (F.surface() == Surface::Disk && q.x * q.x + q.y * q.y > 1.0) continue;
            const double v = F.value(t, SurfacePoint(q));
            if (want_max ? v > best : v < best) best = v;
        }
    }
    return best;
}

} // namespace

HoferNormResult hofer_norm(const TimePeriodicHamiltonian& F, int t_grid, int space_grid) {
    if (t_grid < 2 || space_grid < 2)
        throw NumericDomainError("hofer_norm: grids need at least 2 samples");
    const SpaceGrid grid = make_space_grid(F.surface(), space_grid);

    double sum = 0.0;
    for (int it = 0; it < t_grid; ++it) {
        const double t = (it + 0.5) / t_grid; // midpoint rule in time
        double vmax = -std::numeric_limits<double>::infinity();
        double vmin = std::numeric_limits<double>::infinity();
        Vec2 amax, amin;
        for (const Vec2& p : grid.pts) {
            const double v = F.value(t, SurfacePoint(p));
            if (!std::isfinite(v)) throw NumericDomainError("hofer_norm: non-finite value");
            if (v > vmax) { vmax = v; amax = p; }
            if (v < vmin) { vmin = v; amin = p; }
        }
        vmax = refine_extremum(F, t, amax, grid.spacing, true);
        vmin = refine_extremum(F, t, amin, grid.spacing, false);
        sum += (vmax - vmin);
    }
    HoferNormResult out;
    out.value = sum / t_grid;
    out.t_samples = t_grid;
    out.space_samples = space_grid;
    return out;
}

TimePeriodicHamiltonian make_admissible_disk_hamiltonian(
    double c, const TimePeriodicHamiltonian::Evaluator& interior, double r0,
    const TimePeriodicHamiltonian::Gradient& interior_grad,
    int ring_samples, double tol) {
    if (!(r0 > 0.0 && r0 < 1.0))
        throw ConstructionError("admissible Hamiltonian requires 0 < r0 < 1");

    const auto boundary = [c](double, double x, double y) {
        return 0.5 * c * (x * x + y * y - 1.0);
    };
    const auto boundary_grad = [c](double, double x, double y) -> Vec2 {
        return {c * x, c * y};
    };

    // C^1 match on the gluing ring, sampled
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < ring_samples; ++i) {
        const double th = two_pi * i / ring_samples;
        const double x = r0 * std::cos(th), y = r0 * std::sin(th);
        const double dv = std::abs(interior(0.0, x, y) - boundary(0.0, x, y));
        if (dv > tol)
            throw ConstructionError("admissible gluing: value mismatch " + std::to_string(dv) +
                                    " on ring r0");
        if (interior_grad) {
            const Vec2 gi = interior_grad(0.0, x, y);
            const Vec2 gb = boundary_grad(0.0, x, y);
            if ((gi - gb).norm() > tol)
                throw ConstructionError("admissible gluing: gradient mismatch on ring r0");
        }
    }

    auto eval = [interior, boundary, r0](double t, double x, double y) {
        return (x * x + y * y >= r0 * r0) ? boundary(t, x, y) : interior(t, x, y);
    };
    TimePeriodicHamiltonian::Gradient grad = nullptr;
    if (interior_grad) {
        grad = [interior_grad, boundary_grad, r0](double t, double x, double y) -> Vec2 {
            return (x * x + y * y >= r0 * r0) ? boundary_grad(t, x, y) : interior_grad(t, x, y);
        };
    }
    TimePeriodicHamiltonian H(Surface::Disk, eval, Normalization::AdmissibleSlope, grad);
    H.set_admissible(c, r0);
    return H;
}

} // namespace braidstab
