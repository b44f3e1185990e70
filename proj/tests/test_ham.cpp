#include <doctest.h>

#include <cmath>

#include "braidstab/errors.hpp"
#include "braidstab/hamiltonian.hpp"
#include "braidstab/integrator.hpp"
#include "braidstab/presets.hpp"

using namespace braidstab;

namespace {

// closed-form oracle: flow of H = c(x^2+y^2)/2 is z(t) = e^{-ict} z0
Vec2 rotation_oracle(const Vec2& z0, double c, double t) {
    const double co = std::cos(c * t), si = std::sin(c * t);
    return {co * z0.x + si * z0.y, -si * z0.x + co * z0.y};
}

} // namespace

TEST_CASE("hamiltonian vector field sign convention") {
    const double c = 2 * M_PI;
    auto H = make_preset("quadratic", {{"c", c}});
    const Vec2 v = hamiltonian_vector_field(H, 0.0, SurfacePoint(1.0, 0.0));
    CHECK(v.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v.y == doctest::Approx(-c).epsilon(1e-12));

    TimePeriodicHamiltonian constant(Surface::Disk, [](double, double, double) { return 3.5; });
    const Vec2 z = hamiltonian_vector_field(constant, 0.3, SurfacePoint(0.2, -0.4));
    CHECK(std::abs(z.x) < 1e-9);
    CHECK(std::abs(z.y) < 1e-9);

    TimePeriodicHamiltonian xy(Surface::Disk, [](double, double x, double y) { return x * y; });
    const Vec2 w = hamiltonian_vector_field(xy, 0.0, SurfacePoint(2.0, 3.0));
    CHECK(w.x == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(w.y == doctest::Approx(-3.0).epsilon(1e-8));
}

TEST_CASE("integrate_flow matches the linear rotation oracle") {
    const double c = M_PI / 2;
    auto H = make_preset("quadratic", {{"c", c}});
    const Trajectory tr = integrate_flow(H, SurfacePoint(1.0, 0.0), 0.0, 1.0, 1e-3);
    const Vec2 expect = rotation_oracle({1.0, 0.0}, c, 1.0);
    CHECK(expect.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(expect.y == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK((tr.back().lift - expect).norm() < 1e-6);
}

TEST_CASE("torus shear transports the line y=1/4 by -1 in x") {
    auto H = make_preset("shear");
    const Trajectory tr = integrate_flow(H, SurfacePoint(0.0, 0.25), 0.0, 1.0, 1e-3);
    const Vec2 end = tr.back().lift;
    CHECK(end.x == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(end.y == doctest::Approx(0.25).epsilon(1e-12));
    // reduced endpoint coincides with the start on the torus (seam-safe check)
    CHECK(surface_distance(Surface::Torus, tr.back(), SurfacePoint(0.0, 0.25)) < 1e-9);
}

TEST_CASE("autonomous energy error shrinks at second order") {
    auto P = make_preset("pendulum");
    auto drift_p = [&](double step) {
        const Trajectory tr = integrate_flow(P, SurfacePoint(0.25, 0.1), 0.0, 1.0, step);
        const double h0 = P.value(0.0, tr.front());
        double worst = 0.0;
        for (std::size_t i = 0; i < tr.size(); ++i)
            worst = std::max(worst, std::abs(P.value(tr.times[i], tr.points[i]) - h0));
        return worst;
    };
    const double p1 = drift_p(4e-3);
    const double p2 = drift_p(2e-3);
    CHECK(p1 / p2 > 3.0); // ~4x for a second-order scheme
    CHECK(p1 / p2 < 5.0);
}

TEST_CASE("backward integration retraces the forward flow") {
    auto H = make_preset("resonant-rotation");
    const SurfacePoint p0(0.4, 0.2);
    const Trajectory fwd = integrate_flow(H, p0, 0.0, 1.0, 1e-3);
    const Trajectory bwd = integrate_flow(H, fwd.back(), 1.0, 0.0, 1e-3);
    CHECK((bwd.front().lift - p0.lift).norm() < 1e-8);
}

TEST_CASE("time-1 Jacobian has unit determinant on the presets") {
    for (const char* name : {"rotation", "pendulum", "shear", "resonant-rotation"}) {
        auto H = make_preset(name);
        const SurfacePoint p(0.3, 0.25);
        auto [q, M] = flow_map_with_jacobian(H, p, 0.0, 1.0, 1e-3);
        CHECK(std::abs(M.det() - 1.0) < 1e-6);
    }
}

TEST_CASE("torus reduction is independent of the starting lift") {
    auto H = make_preset("pendulum");
    const Trajectory a = integrate_flow(H, SurfacePoint(0.25, 0.1), 0.0, 1.0, 1e-3);
    const Trajectory b = integrate_flow(H, SurfacePoint(3.25, 0.1), 0.0, 1.0, 1e-3);
    const Vec2 ra = a.back().reduced(Surface::Torus);
    const Vec2 rb = b.back().reduced(Surface::Torus);
    CHECK(std::abs(ra.x - rb.x) < 1e-9);
    CHECK(std::abs(ra.y - rb.y) < 1e-9);
}

TEST_CASE("hofer norm of a scaled bump") {
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.25}, {"cy", 0.0}, {"radius", 0.2}});
    const double A = 2.5;
    TimePeriodicHamiltonian F(Surface::Disk, [B, A](double t, double x, double y) {
        return A * B.value(t, SurfacePoint(x, y));
    });
    const double norm = hofer_norm(F, 16, 129).value;
    CHECK(norm == doctest::Approx(A).epsilon(1e-6));

    TimePeriodicHamiltonian zero(Surface::Disk, [](double, double, double) { return 0.0; });
    CHECK(hofer_norm(zero, 8, 17).value == 0.0);
}

TEST_CASE("hofer norm time quadrature: sin(2 pi t) bump") {
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.25}, {"cy", 0.0}, {"radius", 0.2}});
    TimePeriodicHamiltonian F(Surface::Disk, [B](double t, double x, double y) {
        return std::sin(2 * M_PI * t) * B.value(t, SurfacePoint(x, y));
    });
    const double norm = hofer_norm(F, 4096, 129).value;
    CHECK(norm == doctest::Approx(2.0 / M_PI).epsilon(1e-4));
}

TEST_CASE("hofer norm scales exactly under power-of-two amplitudes") {
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.1}, {"cy", 0.2}, {"radius", 0.3}});
    TimePeriodicHamiltonian F2(Surface::Disk, [B](double t, double x, double y) {
        return 2.0 * B.value(t, SurfacePoint(x, y));
    });
    const double n1 = hofer_norm(B, 32, 65).value;
    const double n2 = hofer_norm(F2, 32, 65).value;
    CHECK(n2 == 2.0 * n1); // scaling by 2 is exact in floating point
}

TEST_CASE("admissible disk Hamiltonian: boundary form and gluing") {
    const double c = 1.7;
    auto interior = [c](double, double x, double y) {
        return 0.5 * c * (x * x + y * y - 1.0);
    };
    auto grad = [c](double, double x, double y) -> Vec2 { return {c * x, c * y}; };
    auto H = make_admissible_disk_hamiltonian(c, interior, 0.8, grad);
    CHECK(H.value(0.0, SurfacePoint(1.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(H.value(0.0, SurfacePoint(0.0, 0.0)) == doctest::Approx(-c / 2).epsilon(1e-12));
    CHECK(*H.slope() == doctest::Approx(c));

    // same quadratic on both sides of the ring: gradient continuous
    for (int i = 0; i < 64; ++i) {
        const double th = 2 * M_PI * i / 64;
        const Vec2 gin =
            H.gradient(0.0, SurfacePoint((0.8 - 1e-9) * std::cos(th), (0.8 - 1e-9) * std::sin(th)));
        const Vec2 gout =
            H.gradient(0.0, SurfacePoint((0.8 + 1e-9) * std::cos(th), (0.8 + 1e-9) * std::sin(th)));
        CHECK((gin - gout).norm() < 1e-8);
    }

    auto bad_interior = [c](double, double x, double y) {
        return 0.5 * c * (x * x + y * y - 1.0) + 0.1;
    };
    CHECK_THROWS_AS(make_admissible_disk_hamiltonian(c, bad_interior, 0.8), ConstructionError);
}

TEST_CASE("preset gradients agree with finite differences") {
    for (const char* name : {"rotation", "shear", "pendulum", "bump", "resonant-rotation"}) {
        auto H = make_preset(name);
        TimePeriodicHamiltonian fd(H.surface(), [H](double t, double x, double y) {
            return H.value(t, SurfacePoint(x, y));
        });
        for (double t : {0.0, 0.37}) {
            for (double x : {0.15, 0.45}) {
                for (double y : {0.2, -0.3}) {
                    const Vec2 ga = H.gradient(t, SurfacePoint(x, y));
                    const Vec2 gn = fd.gradient(t, SurfacePoint(x, y));
                    CHECK((ga - gn).norm() < 1e-7);
                }
            }
        }
    }
}

TEST_CASE("zero-mean presets have vanishing grid quadrature") {
    for (const char* name : {"shear", "pendulum"}) {
        auto H = make_preset(name);
        const int n = 128;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sum += H.value(0.0, SurfacePoint((i + 0.5) / n, (j + 0.5) / n));
        CHECK(std::abs(sum / (n * n)) < 1e-3);
    }
}

TEST_CASE("time periodicity reduces t mod 1") {
    auto H = make_preset("forced-pendulum", {{"amp", 0.2}});
    const SurfacePoint p(0.3, 0.1);
    CHECK(H.value(0.25, p) == H.value(1.25, p));
    CHECK(H.value(0.25, p) == H.value(-0.75, p));
}
