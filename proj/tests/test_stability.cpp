#include <doctest.h>

#include <cmath>

#include "braidstab/presets.hpp"
#include "braidstab/stability.hpp"

using namespace braidstab;

TEST_CASE("kth power Hamiltonian basics") {
    auto G = make_preset("rotation", {{"c", 0.7}});
    SUBCASE("k = 1 is the identity transformation") {
        auto H = kth_power_hamiltonian(G, 1);
        const SurfacePoint p(0.3, 0.2);
        CHECK(H.value(0.37, p) == G.value(0.37, p));
    }
    SUBCASE("time-1 map of the cube is the rotation by 3c") {
        auto H = kth_power_hamiltonian(G, 3);
        const SurfacePoint p(0.4, -0.1);
        const SurfacePoint q = flow_map(H, p, 0.0, 1.0, 1e-3);
        const Vec2 expect = Mat2::rotation(-3 * 0.7).apply(p.lift);
        CHECK((q.lift - expect).norm() < 1e-6);
    }
    SUBCASE("fixed points persist under the power") {
        auto H = kth_power_hamiltonian(G, 3);
        const SurfacePoint origin(0.0, 0.0);
        const SurfacePoint q = flow_map(H, origin, 0.0, 1.0, 1e-3);
        CHECK(q.lift.norm() < 1e-10);
    }
}

TEST_CASE("k-periodic action equals the promoted 1-periodic action") {
    auto H = make_preset("resonant-rotation");
    // find one period-3 point
    SeedGrid grid;
    grid.grid_enabled = false;
    for (int i = 0; i < 18; ++i) {
        const double th = 2 * M_PI * i / 18;
        grid.extra.emplace_back(0.5 * std::cos(th), 0.5 * std::sin(th));
    }
    OrbitSearchOptions opt;
    const OrbitSet set = find_periodic_points(H, 3, grid, opt);
    REQUIRE(set.size() >= 1);
    const PeriodicOrbit& orb = set.orbits[0];
    REQUIRE(orb.action.has_value());

    // matched discretization: a step h of 3 G(3t, .) corresponds exactly to a
    // step 3h of G, so the two quadratures see the same sample points
    auto H3 = kth_power_hamiltonian(H, 3);
    OrbitSearchOptions opt3 = opt;
    opt3.step = opt.step / 3.0;
    const PeriodicOrbit promoted = promote_root(H3, orb.seed, 1, opt3);
    REQUIRE(promoted.action.has_value());
    CHECK(std::abs(*promoted.action - *orb.action) < 1e-8);
}

TEST_CASE("perturbation spec scales linearly in the amplitude") {
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.15}, {"cy", 0.0}, {"radius", 0.1}});
    const PerturbationSpec p1 = make_perturbation(B, 0.5, 16, 65);
    const PerturbationSpec p2 = make_perturbation(B, 1.0, 16, 65);
    CHECK(p2.hofer_bound == 2.0 * p1.hofer_bound); // power-of-two scaling is exact
    CHECK(make_perturbation(B, 0.0, 16, 65).hofer_bound == 0.0);
}

TEST_CASE("composite with a zero perturbation is the base Hamiltonian") {
    auto H = make_preset("rotation", {{"c", 1.0}});
    auto B = make_preset("bump");
    const PerturbationSpec zero = make_perturbation(B, 0.0, 8, 33);
    auto C = compose_perturbed_hamiltonian(H, zero);
    for (double t : {0.0, 0.4}) {
        for (double x : {0.1, 0.5}) {
            const SurfacePoint p(x, -0.2);
            CHECK(C.value(t, p) == doctest::Approx(H.value(t, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("composite over the zero base is the perturbation itself") {
    TimePeriodicHamiltonian zero(Surface::Disk, [](double, double, double) { return 0.0; },
                                 Normalization::VanishNearBoundary,
                                 [](double, double, double) -> Vec2 { return {0.0, 0.0}; });
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.2}, {"cy", 0.1}, {"radius", 0.3}});
    const PerturbationSpec pert = make_perturbation(B, 0.7, 8, 33);
    CompositeOptions copt;
    copt.mode = CompositeMode::Exact;
    auto C = compose_perturbed_hamiltonian(zero, pert, copt);
    for (double t : {0.0, 0.3, 0.8}) {
        for (double x : {0.1, 0.3}) {
            const SurfacePoint p(x, 0.05);
            CHECK(C.value(t, p) ==
                  doctest::Approx(0.7 * B.value(t, p)).epsilon(1e-9));
        }
    }
}

TEST_CASE("time-1 map of the composite equals the chained flows") {
    auto H = make_preset("rotation", {{"c", 1.0}});
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.25}, {"cy", 0.0}, {"radius", 0.35}});
    const PerturbationSpec pert = make_perturbation(B, 0.15, 8, 33);
    CompositeOptions copt;
    copt.mode = CompositeMode::MemoizedGrid;
    copt.back_step = 1e-3;
    // the rotation's inverse flow is linear, so bilinear interpolation is
    // exact and a coarse grid is fine
    copt.grid_spacing = 1.0 / 64.0;
    auto C = compose_perturbed_hamiltonian(H, pert, copt);

    const PerturbedSystem sys = make_perturbed_system(H, pert);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const SurfacePoint p(-0.63 + 0.14 * i, -0.63 + 0.14 * j);
            const SurfacePoint via_composite = flow_map(C, p, 0.0, 1.0, 1e-3);
            auto [via_chain, M] = sys.time_k_map_with_jacobian(p, 1, 1e-3);
            CHECK((via_composite.lift - via_chain.lift).norm() < 1e-5);
        }
    }
}

TEST_CASE("memoized inverse-flow grid stays close to the exact mode") {
    auto H = make_preset("rotation", {{"c", 1.0}});
    auto B = make_preset("bump", {{"amp", 1.0}, {"cx", 0.25}, {"cy", 0.0}, {"radius", 0.2}});
    const PerturbationSpec pert = make_perturbation(B, 0.4, 8, 33);
    CompositeOptions exact, memo;
    exact.mode = CompositeMode::Exact;
    memo.mode = CompositeMode::MemoizedGrid;
    auto Ce = compose_perturbed_hamiltonian(H, pert, exact);
    auto Cm = compose_perturbed_hamiltonian(H, pert, memo);
    for (double t : {0.25, 0.7}) {
        for (double x : {0.1, 0.35}) {
            const SurfacePoint p(x, 0.2);
            CHECK(std::abs(Ce.value(t, p) - Cm.value(t, p)) < 1e-4);
        }
    }
}

TEST_CASE("stability experiment: zero amplitude reproduces the braid exactly") {
    StabilityScenarioConfig cfg;
    cfg.preset = "resonant-rotation";
    cfg.promote_k = 3;
    cfg.seeds.grid_enabled = false;
    for (int i = 0; i < 24; ++i) {
        const double th = 2 * M_PI * i / 24;
        cfg.seeds.extra.emplace_back(0.5 * std::cos(th), 0.5 * std::sin(th));
        cfg.seeds.extra.emplace_back(0.62 * std::cos(th), 0.62 * std::sin(th));
    }
    cfg.seeds.extra.emplace_back(0.0, 0.0);
    cfg.amplitudes = {0.0};
    cfg.perturbation_params = {{"amp", 1.0}, {"cx", 0.13}, {"cy", 0.0}, {"radius", 0.1}};
    cfg.gamma_iterations = 8;

    const StabilityRun run = run_stability_experiment(cfg);
    REQUIRE(run.reports.size() == 1);
    const StabilityReport& rep = run.reports[0];
    CHECK(rep.word_minus == rep.word_plus);
    CHECK(rep.conjugacy == "yes");
    CHECK(rep.braid_persisted);
    CHECK(!rep.falsified);
    CHECK(rep.max_drift < 1e-8);
}

TEST_CASE("origin of the perturbed rotation persists as a one-strand braid") {
    StabilityScenarioConfig cfg;
    cfg.preset = "rotation";
    cfg.preset_params = {{"c", 1.0}};
    cfg.promote_k = 1;
    cfg.target_type = "any";
    cfg.seeds.grid_enabled = false;
    cfg.seeds.extra.emplace_back(0.05, 0.05);
    cfg.seeds.extra.emplace_back(0.0, 0.0);
    cfg.amplitudes = {0.0, 1e-4};
    cfg.perturbation_params = {{"amp", 1.0}, {"cx", 0.4}, {"cy", 0.0}, {"radius", 0.15}};
    cfg.gamma_iterations = 6;

    const StabilityRun run = run_stability_experiment(cfg);
    REQUIRE(run.reports.size() == 2);
    for (const auto& rep : run.reports) {
        CHECK(rep.conjugacy == "yes"); // empty word on one strand both sides
        CHECK(rep.matches.size() == 1);
        CHECK(!rep.falsified);
    }
}
