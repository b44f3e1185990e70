#ifndef BRAIDSTAB_HAMILTONIAN_HPP
#define BRAIDSTAB_HAMILTONIAN_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "braidstab/geometry.hpp"

namespace braidstab {

enum class Normalization {
    None,
    ZeroMean,           // torus: grid quadrature of H_t vanishes
    VanishNearBoundary, // disk: compactly supported in the open disk
    AdmissibleSlope,    // disk: H = c(r^2-1)/2 for r >= r0
};

// Time-periodic Hamiltonian H(t, x, y), 1-periodic in t. Evaluators receive
// lift coordinates and are responsible for their own spatial periodicity on
// the torus. Time is reduced mod 1 with the half-open convention [0,1)
// before the evaluator is called.
class TimePeriodicHamiltonian {
public:
    using Evaluator = std::function<double(double, double, double)>;
    using Gradient = std::function<Vec2(double, double, double)>;

    TimePeriodicHamiltonian() = default;
    TimePeriodicHamiltonian(Surface surface, Evaluator eval,
                            Normalization norm = Normalization::None,
                            Gradient grad = nullptr);

    Surface surface() const { return surface_; }
    Normalization normalization() const { return norm_; }
    bool has_analytic_gradient() const { return static_cast<bool>(grad_); }

    // Admissible-slope metadata (disk only).
    void set_admissible(double slope_c, double r0) { slope_c_ = slope_c; r0_ = r0; }
    std::optional<double> slope() const { return slope_c_; }
    std::optional<double> gluing_radius() const { return r0_; }

    double value(double t, const SurfacePoint& p) const;
    // dH = (dH/dx, dH/dy); analytic when supplied, otherwise 4th-order
    // central differences with step h_grad.
    Vec2 gradient(double t, const SurfacePoint& p) const;

    // Second derivative matrix of H_t, by central differences of gradient().
    Mat2 hessian(double t, const SurfacePoint& p) const;

    static double reduce_time(double t);

    double grad_step() const { return h_grad_; }
    void set_grad_step(double h) { h_grad_ = h; }

private:
    Surface surface_ = Surface::Disk;
    Evaluator eval_;
    Gradient grad_;
    Normalization norm_ = Normalization::None;
    std::optional<double> slope_c_;
    std::optional<double> r0_;
    double h_grad_ = 1e-5;
};

// X_H = (dH/dy, -dH/dx), the convention i_{X_H} omega = dH with
// omega = dx ^ dy. Throws NumericDomainError on non-finite gradients.
Vec2 hamiltonian_vector_field(const TimePeriodicHamiltonian& H, double t, const SurfacePoint& p);

struct HoferNormResult {
    double value = 0.0;
    int t_samples = 0;
    int space_samples = 0; // per axis
};

// Quadrature of int_0^1 (max_p F_t - min_p F_t) dt. Extrema are located by a
// grid scan over the surface followed by one local refinement pass, so the
// result is a certified-from-below estimate of the true norm.
HoferNormResult hofer_norm(const TimePeriodicHamiltonian& F, int t_grid = 256, int space_grid = 129);

// Builds a disk Hamiltonian equal to c(r^2-1)/2 for r >= r0 and to
// `interior` elsewhere. The interior must agree in C^1 with the boundary
// form on the gluing ring r = r0 (checked on ring_samples points).
TimePeriodicHamiltonian make_admissible_disk_hamiltonian(
    double c, const TimePeriodicHamiltonian::Evaluator& interior, double r0,
    const TimePeriodicHamiltonian::Gradient& interior_grad = nullptr,
    int ring_samples = 64, double tol = 1e-6);

} // namespace braidstab

#endif
