#ifndef BRAIDSTAB_INTEGRATOR_HPP
#define BRAIDSTAB_INTEGRATOR_HPP

#include <vector>

#include "braidstab/hamiltonian.hpp"

namespace braidstab {

// Discretized flow segment. Points carry lift coordinates; torus
// trajectories stay on the universal cover and are reduced on demand.
struct Trajectory {
    std::vector<double> times;
    std::vector<SurfacePoint> points;
    double step = 0.0;

    std::size_t size() const { return times.size(); }
    const SurfacePoint& front() const { return points.front(); }
    const SurfacePoint& back() const { return points.back(); }

    // Linear interpolation of the lift at time t.
    SurfacePoint at(double t) const;
};

struct IntegratorOptions {
    double tol_inner = 1e-12;
    int max_inner = 50;
};

// Implicit midpoint: z1 = z0 + h X_H(t + h/2, (z0+z1)/2), fixed-point inner
// iteration with a Newton fallback. Symplectic and second order; self-adjoint,
// so backward runs (t1 < t0) retrace forward ones.
SurfacePoint midpoint_step(const TimePeriodicHamiltonian& H, double t, double h,
                           const SurfacePoint& z, const IntegratorOptions& opt = {});

Trajectory integrate_flow(const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
                          double t0, double t1, double step,
                          const IntegratorOptions& opt = {});

// Endpoint only (no trajectory storage).
SurfacePoint flow_map(const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
                      double t0, double t1, double step,
                      const IntegratorOptions& opt = {});

// Flow together with the variational equations: returns phi^{t0->t1}(p) and
// the Jacobian D phi. The tangent propagation uses the midpoint Hessian,
// M1 = M0 + h DX(t+h/2, mid) (M0+M1)/2.
std::pair<SurfacePoint, Mat2> flow_map_with_jacobian(
    const TimePeriodicHamiltonian& H, const SurfacePoint& p0,
    double t0, double t1, double step, const IntegratorOptions& opt = {});

// k-fold time-1 map with monodromy, k >= 1.
std::pair<SurfacePoint, Mat2> time_k_map_with_jacobian(
    const TimePeriodicHamiltonian& H, const SurfacePoint& p, int k, double step,
    const IntegratorOptions& opt = {});

} // namespace braidstab

#endif
