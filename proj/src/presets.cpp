#include "braidstab/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "braidstab/errors.hpp"

namespace braidstab {

namespace {

double get(const ParamMap& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

constexpr double kTwoPi = 2.0 * M_PI;

} // namespace

double bump_profile(double dist, double radius) {
    const double rho = (dist / radius) * (dist / radius);
    if (rho >= 1.0 - 1e-12) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - rho));
}

double bump_profile_derivative(double dist, double radius) {
    const double rho = (dist / radius) * (dist / radius);
    if (rho >= 1.0 - 1e-12) return 0.0;
    const double b = std::exp(1.0 - 1.0 / (1.0 - rho));
    const double one_m = 1.0 - rho;
    return -b * (2.0 * dist / (radius * radius)) / (one_m * one_m);
}

double smoothstep5(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double smoothstep5_derivative(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double v = u * (1.0 - u);
    return 30.0 * v * v;
}

namespace {

TimePeriodicHamiltonian make_rotation(const ParamMap& p) {
    const double c = get(p, "c", 1.0);
    const double r0 = get(p, "r0", 0.9);
    auto eval = [c](double, double x, double y) { return 0.5 * c * (x * x + y * y - 1.0); };
    auto grad = [c](double, double x, double y) -> Vec2 { return {c * x, c * y}; };
    TimePeriodicHamiltonian H(Surface::Disk, eval, Normalization::AdmissibleSlope, grad);
    H.set_admissible(c, r0);
    return H;
}

TimePeriodicHamiltonian make_quadratic(const ParamMap& p) {
    const double c = get(p, "c", 1.0);
    auto eval = [c](double, double x, double y) { return 0.5 * c * (x * x + y * y); };
    auto grad = [c](double, double x, double y) -> Vec2 { return {c * x, c * y}; };
    return TimePeriodicHamiltonian(Surface::Disk, eval, Normalization::None, grad);
}

TimePeriodicHamiltonian make_shear(const ParamMap& p) {
    const double amp = get(p, "amp", 1.0);
    auto eval = [amp](double, double, double y) { return amp * std::cos(kTwoPi * y) / kTwoPi; };
    auto grad = [amp](double, double, double y) -> Vec2 {
        return {0.0, -amp * std::sin(kTwoPi * y)};
    };
    return TimePeriodicHamiltonian(Surface::Torus, eval, Normalization::ZeroMean, grad);
}

// torus pendulum: momentum branch picked as y - round(y) in [-1/2, 1/2)
double pendulum_value(double x, double y) {
    const double yr = y - std::round(y);
    return 0.5 * yr * yr + (std::cos(kTwoPi * x) - 1.0) / (kTwoPi * kTwoPi)
           - (1.0 / 24.0 - 1.0 / (4.0 * M_PI * M_PI));
}

TimePeriodicHamiltonian make_pendulum(const ParamMap&) {
    auto eval = [](double, double x, double y) { return pendulum_value(x, y); };
    auto grad = [](double, double x, double y) -> Vec2 {
        return {-std::sin(kTwoPi * x) / kTwoPi, y - std::round(y)};
    };
    return TimePeriodicHamiltonian(Surface::Torus, eval, Normalization::ZeroMean, grad);
}

TimePeriodicHamiltonian make_forced_pendulum(const ParamMap& p) {
    const double amp = get(p, "amp", 0.1);
    auto eval = [amp](double t, double x, double y) {
        return pendulum_value(x, y) + amp * std::sin(kTwoPi * t) * std::sin(kTwoPi * x) / kTwoPi;
    };
    auto grad = [amp](double t, double x, double y) -> Vec2 {
        return {-std::sin(kTwoPi * x) / kTwoPi + amp * std::sin(kTwoPi * t) * std::cos(kTwoPi * x),
                y - std::round(y)};
    };
    return TimePeriodicHamiltonian(Surface::Torus, eval, Normalization::ZeroMean, grad);
}

TimePeriodicHamiltonian make_bump(const ParamMap& p) {
    const double amp = get(p, "amp", 1.0);
    const double cx = get(p, "cx", 0.25);
    const double cy = get(p, "cy", 0.0);
    const double radius = get(p, "radius", 0.2);
    if (std::hypot(cx, cy) + radius >= 1.0)
        throw ConstructionError("bump support must stay inside the open disk");
    auto eval = [=](double, double x, double y) {
        return amp * bump_profile(std::hypot(x - cx, y - cy), radius);
    };
    auto grad = [=](double, double x, double y) -> Vec2 {
        const double dx = x - cx, dy = y - cy;
        const double d = std::hypot(dx, dy);
        if (d < 1e-14 || d >= radius) return {0.0, 0.0};
        const double dB = amp * bump_profile_derivative(d, radius);
        return {dB * dx / d, dB * dy / d};
    };
    return TimePeriodicHamiltonian(Surface::Disk, eval, Normalization::VanishNearBoundary, grad);
}

TimePeriodicHamiltonian make_bump_perturbed(const ParamMap& p) {
    TimePeriodicHamiltonian rot = make_rotation(p);
    TimePeriodicHamiltonian bump = make_bump(p);
    const double c = get(p, "c", 1.0);
    const double r0 = get(p, "r0", 0.9);
    const double support = std::hypot(get(p, "cx", 0.25), get(p, "cy", 0.0)) + get(p, "radius", 0.2);
    auto eval = [rot, bump](double t, double x, double y) {
        const SurfacePoint q(x, y);
        return rot.value(t, q) + bump.value(t, q);
    };
    auto grad = [rot, bump](double t, double x, double y) -> Vec2 {
        const SurfacePoint q(x, y);
        return rot.gradient(t, q) + bump.gradient(t, q);
    };
    TimePeriodicHamiltonian H(Surface::Disk, eval, Normalization::AdmissibleSlope, grad);
    H.set_admissible(c, std::max(r0, support));
    return H;
}

// --- resonant rotation -------------------------------------------------
//
// Radial twist a(s), s = r^2, equal to the admissible form c(s-1)/2 outside
// s_hi and blended inside so the angular speed omega(r) = 2 a'(r^2) crosses
// omega_target at r_res transversally. The forcing is a 3-fold angular kick
// supported on a ring, composed with the twist's own (explicitly invertible)
// rotation so that the time-1 map is exactly flow(twist) o flow(kick).

struct ResonantParams {
    double c, s_lo, s_hi, amp, eps, ring_c, ring_w;
};

ResonantParams resonant_params(const ParamMap& p) {
    ResonantParams rp;
    rp.c = get(p, "c", 1.0);
    rp.s_lo = get(p, "s_lo", -0.2);
    rp.s_hi = get(p, "s_hi", 0.81);
    const double r_res = get(p, "r_res", 0.5);
    const double omega_target = get(p, "omega", kTwoPi / 3.0);
    const double delta = rp.s_hi - rp.s_lo;
    const double u_res = (r_res * r_res - rp.s_lo) / delta;
    const double sp = smoothstep5_derivative(u_res);
    if (sp < 1e-12) throw ConstructionError("resonant-rotation: r_res outside the blend zone");
    rp.amp = (rp.c - omega_target) * delta / (2.0 * sp);
    rp.eps = get(p, "kick", 0.03);
    rp.ring_c = get(p, "ring_c", 0.5);
    rp.ring_w = get(p, "ring_w", 0.25);
    return rp;
}

double twist_a(const ResonantParams& rp, double s) {
    const double u = (s - rp.s_lo) / (rp.s_hi - rp.s_lo);
    return 0.5 * rp.c * (s - 1.0) + rp.amp * (1.0 - smoothstep5(u));
}

double twist_a_prime(const ResonantParams& rp, double s) {
    const double delta = rp.s_hi - rp.s_lo;
    const double u = (s - rp.s_lo) / delta;
    return 0.5 * rp.c - rp.amp * smoothstep5_derivative(u) / delta;
}

double twist_a_second(const ResonantParams& rp, double s) {
    const double delta = rp.s_hi - rp.s_lo;
    const double u = (s - rp.s_lo) / delta;
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double s2 = 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u);
    return -rp.amp * s2 / (delta * delta);
}

TimePeriodicHamiltonian make_resonant_twist(const ResonantParams& rp) {
    auto eval = [rp](double, double x, double y) { return twist_a(rp, x * x + y * y); };
    auto grad = [rp](double, double x, double y) -> Vec2 {
        const double ap = twist_a_prime(rp, x * x + y * y);
        return {2.0 * ap * x, 2.0 * ap * y};
    };
    TimePeriodicHamiltonian H(Surface::Disk, eval, Normalization::AdmissibleSlope, grad);
    H.set_admissible(rp.c, std::sqrt(rp.s_hi));
    return H;
}

double ring_rho(const ResonantParams& rp, double r) {
    return bump_profile(std::abs(r - rp.ring_c), rp.ring_w);
}

double ring_rho_prime(const ResonantParams& rp, double r) {
    const double d = r - rp.ring_c;
    const double sgn = d >= 0.0 ? 1.0 : -1.0;
    return sgn * bump_profile_derivative(std::abs(d), rp.ring_w);
}

TimePeriodicHamiltonian make_resonant_kick(const ResonantParams& rp) {
    auto eval = [rp](double, double x, double y) {
        const double r = std::hypot(x, y);
        const double rho = ring_rho(rp, r);
        if (rho == 0.0) return 0.0;
        return rp.eps * rho * std::cos(3.0 * std::atan2(y, x));
    };
    auto grad = [rp](double, double x, double y) -> Vec2 {
        const double r = std::hypot(x, y);
        const double rho = ring_rho(rp, r);
        if (rho == 0.0) return {0.0, 0.0};
        const double th = std::atan2(y, x);
        const double c3 = std::cos(3.0 * th), s3 = std::sin(3.0 * th);
        const double drho = ring_rho_prime(rp, r);
        // grad = rho'(r) cos(3 th) r_hat + 3 rho sin(3 th) (y, -x)/r^2
        return {rp.eps * (drho * c3 * x / r + 3.0 * rho * s3 * y / (r * r)),
                rp.eps * (drho * c3 * y / r - 3.0 * rho * s3 * x / (r * r))};
    };
    return TimePeriodicHamiltonian(Surface::Disk, eval, Normalization::VanishNearBoundary, grad);
}

TimePeriodicHamiltonian make_resonant_rotation(const ParamMap& p) {
    const ResonantParams rp = resonant_params(p);
    auto eval = [rp](double t, double x, double y) {
        const double s = x * x + y * y;
        double v = twist_a(rp, s);
        const double r = std::sqrt(s);
        const double rho = ring_rho(rp, r);
        if (rho != 0.0) {
            const double omega = 2.0 * twist_a_prime(rp, s);
            v += rp.eps * rho * std::cos(3.0 * (std::atan2(y, x) + t * omega));
        }
        return v;
    };
    auto grad = [rp](double t, double x, double y) -> Vec2 {
        const double s = x * x + y * y;
        const double ap = twist_a_prime(rp, s);
        Vec2 g{2.0 * ap * x, 2.0 * ap * y};
        const double r = std::sqrt(s);
        const double rho = ring_rho(rp, r);
        if (rho != 0.0) {
            const double omega = 2.0 * ap;
            const double domega_dr = 4.0 * r * twist_a_second(rp, s);
            const double phase = 3.0 * (std::atan2(y, x) + t * omega);
            const double cp = std::cos(phase), sp = std::sin(phase);
            const double drho = ring_rho_prime(rp, r);
            // d(phase)/dx = 3 (-y/r^2 + t domega/dr * x/r), similarly for y
            const double px = 3.0 * (-y / s + t * domega_dr * x / r);
            const double py = 3.0 * (x / s + t * domega_dr * y / r);
            g.x += rp.eps * (drho * cp * x / r - rho * sp * px);
            g.y += rp.eps * (drho * cp * y / r - rho * sp * py);
        }
        return g;
    };
    TimePeriodicHamiltonian H(Surface::Disk, eval, Normalization::AdmissibleSlope, grad);
    H.set_admissible(rp.c, std::sqrt(rp.s_hi));
    return H;
}

} // namespace

TimePeriodicHamiltonian resonant_rotation_twist_part(const ParamMap& p) {
    return make_resonant_twist(resonant_params(p));
}

TimePeriodicHamiltonian resonant_rotation_kick_part(const ParamMap& p) {
    return make_resonant_kick(resonant_params(p));
}

double resonant_rotation_omega(double r, const ParamMap& p) {
    return 2.0 * twist_a_prime(resonant_params(p), r * r);
}

TimePeriodicHamiltonian make_preset(const std::string& name, const ParamMap& params) {
    if (name == "rotation") return make_rotation(params);
    if (name == "quadratic") return make_quadratic(params);
    if (name == "shear") return make_shear(params);
    if (name == "pendulum") return make_pendulum(params);
    if (name == "forced-pendulum") return make_forced_pendulum(params);
    if (name == "bump") return make_bump(params);
    if (name == "bump-perturbed") return make_bump_perturbed(params);
    if (name == "resonant-rotation") return make_resonant_rotation(params);
    throw ScenarioError("unknown Hamiltonian preset: " + name);
}

} // namespace braidstab
