#include "braidstab/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "braidstab/errors.hpp"

namespace braidstab {

SurfacePoint Trajectory::at(double t) const {
    if (times.empty()) throw NumericDomainError("empty trajectory");
    if (t <= times.front()) return points.front();
    if (t >= times.back()) return points.back();
    auto it = std::lower_bound(times.begin(), times.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times.begin());
    const double t1 = times[i - 1], t2 = times[i];
    const double w = (t - t1) / (t2 - t1);
    const Vec2 a = points[i - 1].lift, b = points[i].lift;
    return SurfacePoint(a + (b - a) * w);
}

namespace {

// Solve z1 = z0 + h X(t_mid, (z0+z1)/2) for z1. Fixed point first, Newton on
// the midpoint variable if it stalls.
Vec2 implicit_midpoint(const TimePeriodicHamiltonian& H, double t_mid, double h,
                       const Vec2& z0, const IntegratorOptions& opt) {
    auto field = [&](const Vec2& m) -> Vec2 {
        return hamiltonian_vector_field(H, t_mid, SurfacePoint(m));
    };

    Vec2 z1 = z0 + field(z0) * h; // explicit Euler predictor
    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_inner; ++it) {
        const Vec2 mid = (z0 + z1) * 0.5;
        const Vec2 next = z0 + field(mid) * h;
        res = (next - z1).norm();
        z1 = next;
        if (res <= opt.tol_inner) return z1;
    }

    // Newton on F(m) = m - z0 - (h/2) X(t_mid, m) = 0 in the midpoint m
    Vec2 m = (z0 + z1) * 0.5;
    for (int it = 0; it < opt.max_inner; ++it) {
        const Vec2 f = m - z0 - field(m) * (0.5 * h);
        res = f.norm();
        if (res <= opt.tol_inner) {
            return m * 2.0 - z0;
        }
        const Mat2 hess = H.hessian(t_mid, SurfacePoint(m));
        // DX = J * Hess with J = [[0,1],[-1,0]]
        const Mat2 dx{hess.c, hess.d, -hess.a, -hess.b};
        const Mat2 jac{1.0 - 0.5 * h * dx.a, -0.5 * h * dx.b,
                       -0.5 * h * dx.c, 1.0 - 0.5 * h * dx.d};
        const Vec2 delta = jac.inverse().apply(f);
        m = m - delta;
    }
    throw IntegratorError("implicit midpoint failed to converge", t_mid, res);
}

} // namespace

SurfacePoint midpoint_step(const TimePeriodicHamiltonian& H, double t, double h,
                           const SurfacePoint& z, const IntegratorOptions& opt) {
    return SurfacePoint(implicit_midpoint(H, t + 0.5 * h, h, z.lift, opt));
}

Trajectory integrate_flow(const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
                          double t0, double t1, double step, const IntegratorOptions& opt) {
    if (!(step > 0.0)) throw NumericDomainError("integrate_flow: step must be positive");
    if (t1 == t0) throw NumericDomainError("integrate_flow: empty time interval");
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const std::size_t n_full = static_cast<std::size_t>(std::floor(span / step + 1e-12));
    const double rem = span - n_full * step;

    Trajectory traj;
    traj.step = step;
    traj.times.reserve(n_full + 2);
    traj.points.reserve(n_full + 2);
    traj.times.push_back(t0);
    traj.points.push_back(p0);

    SurfacePoint z = p0;
    double t = t0;
    for (std::size_t k = 0; k < n_full; ++k) {
        z = midpoint_step(H, t, dir * step, z, opt);
        t = t0 + dir * (k + 1) * step;
        traj.times.push_back(t);
        traj.points.push_back(z);
    }
    if (rem > 1e-14) {
        z = midpoint_step(H, t, dir * rem, z, opt);
        traj.times.push_back(t1);
        traj.points.push_back(z);
    }
    if (dir < 0) {
        std::reverse(traj.times.begin(), traj.times.end());
        std::reverse(traj.points.begin(), traj.points.end());
    }
    return traj;
}

SurfacePoint flow_map(const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
                      double t0, double t1, double step, const IntegratorOptions& opt) {
    if (!(step > 0.0)) throw NumericDomainError("flow_map: step must be positive");
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const std::size_t n_full = static_cast<std::size_t>(std::floor(span / step + 1e-12));
    const double rem = span - n_full * step;
    SurfacePoint z = p0;
    double t = t0;
    for (std::size_t k = 0; k < n_full; ++k) {
        z = midpoint_step(H, t, dir * step, z, opt);
        t = t0 + dir * (k + 1) * step;
    }
    if (rem > 1e-14) z = midpoint_step(H, t, dir * rem, z, opt);
    return z;
}

namespace {

// One midpoint step of the variational equation,
// M1 = M0 + h DX (M0+M1)/2  =>  M1 = (I - h/2 DX)^{-1} (I + h/2 DX) M0.
Mat2 variational_step(const TimePeriodicHamiltonian& H, double t_mid, double h,
                      const Vec2& mid, const Mat2& M0) {
    const Mat2 hess = H.hessian(t_mid, SurfacePoint(mid));
    const Mat2 dx{hess.c, hess.d, -hess.a, -hess.b};
    const Mat2 a{1.0 - 0.5 * h * dx.a, -0.5 * h * dx.b,
                 -0.5 * h * dx.c, 1.0 - 0.5 * h * dx.d};
    const Mat2 b{1.0 + 0.5 * h * dx.a, 0.5 * h * dx.b,
                 0.5 * h * dx.c, 1.0 + 0.5 * h * dx.d};
    return a.inverse() * (b * M0);
}

} // namespace

std::pair<SurfacePoint, Mat2> flow_map_with_jacobian(
    const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
    double t0, double t1, double step, const IntegratorOptions& opt) {
    if (!(step > 0.0)) throw NumericDomainError("flow_map_with_jacobian: step must be positive");
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const std::size_t n_full = static_cast<std::size_t>(std::floor(span / step + 1e-12));
    const double rem = span - n_full * step;

    SurfacePoint z = p0;
    Mat2 M = Mat2::identity();
    double t = t0;
    auto advance = [&](double h) {
        const double t_mid = t + 0.5 * h;
        const SurfacePoint z1 = midpoint_step(H, t, h, z, opt);
        const Vec2 mid = (z.lift + z1.lift) * 0.5;
        M = variational_step(H, t_mid, h, mid, M);
        z = z1;
    };
    for (std::size_t k = 0; k < n_full; ++k) {
        advance(dir * step);
        t = t0 + dir * (k + 1) * step;
    }
    if (rem > 1e-14) advance(dir * rem);
    return {z, M};
}

std::pair<SurfacePoint, Mat2> time_k_map_with_jacobian(
    const TimePeriodicHamiltonian& H, const SurfacePoint& p, int k, double step,
    const IntegratorOptions& opt) {
    if (k < 1) throw NumericDomainError("time_k_map: k must be >= 1");
    return flow_map_with_jacobian(H, p, 0.0, static_cast<double>(k), step, opt);
}

} // namespace braidstab
