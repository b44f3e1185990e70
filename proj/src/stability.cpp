#include "braidstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <unordered_map>

#include "braidstab/errors.hpp"

namespace braidstab {

TimePeriodicHamiltonian kth_power_hamiltonian(const TimePeriodicHamiltonian& G, int k) {
    if (k < 1) throw NumericDomainError("kth_power_hamiltonian: k must be >= 1");
    if (k == 1) return G;
    auto eval = [G, k](double t, double x, double y) {
        return k * G.value(k * t, SurfacePoint(x, y));
    };
    TimePeriodicHamiltonian::Gradient grad = nullptr;
    if (G.has_analytic_gradient()) {
        grad = [G, k](double t, double x, double y) -> Vec2 {
            return G.gradient(k * t, SurfacePoint(x, y)) * static_cast<double>(k);
        };
    }
    TimePeriodicHamiltonian H(G.surface(), eval, G.normalization(), grad);
    if (G.slope() && G.gluing_radius()) H.set_admissible(k * *G.slope(), *G.gluing_radius());
    return H;
}

PerturbationSpec make_perturbation(const TimePeriodicHamiltonian& profile, double amplitude,
                                   int t_grid, int space_grid) {
    PerturbationSpec spec;
    spec.profile = profile;
    spec.amplitude = amplitude;
    auto eval = [profile, amplitude](double t, double x, double y) {
        return amplitude * profile.value(t, SurfacePoint(x, y));
    };
    TimePeriodicHamiltonian::Gradient grad = nullptr;
    if (profile.has_analytic_gradient()) {
        grad = [profile, amplitude](double t, double x, double y) -> Vec2 {
            return profile.gradient(t, SurfacePoint(x, y)) * amplitude;
        };
    }
    spec.profile = TimePeriodicHamiltonian(profile.surface(), eval, profile.normalization(), grad);
    spec.hofer_bound = (amplitude == 0.0)
                           ? 0.0
                           : hofer_norm(spec.profile, t_grid, space_grid).value;
    return spec;
}

namespace {

struct InverseFlowNode {
    Vec2 psi;
    Mat2 dpsi;
};

struct CompositeState {
    TimePeriodicHamiltonian h_plus;
    TimePeriodicHamiltonian pert; // already includes the amplitude
    CompositeOptions opt;
    std::mutex mu;
    // per exact time slice, lazily filled spatial grid of the inverse flow
    std::map<std::uint64_t, std::unordered_map<std::uint64_t, InverseFlowNode>> slices;

    InverseFlowNode exact_inverse(double t, const Vec2& p) {
        if (t <= 1e-15) return {p, Mat2::identity()};
        auto [q, M] = flow_map_with_jacobian(h_plus, SurfacePoint(p), t, 0.0, opt.back_step);
        return {q.lift, M};
    }

    InverseFlowNode node_at(double t, long ix, long iy) {
        std::uint64_t tkey;
        static_assert(sizeof(double) == sizeof(std::uint64_t));
        std::memcpy(&tkey, &t, sizeof(t));
        const std::uint64_t pkey =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
            static_cast<std::uint32_t>(iy);
        {
            std::lock_guard<std::mutex> lock(mu);
            auto sit = slices.find(tkey);
            if (sit != slices.end()) {
                auto nit = sit->second.find(pkey);
                if (nit != sit->second.end()) return nit->second;
            }
        }
        const double s = opt.grid_spacing;
        InverseFlowNode node = exact_inverse(t, {ix * s, iy * s});
        {
            std::lock_guard<std::mutex> lock(mu);
            slices[tkey][pkey] = node;
        }
        return node;
    }

    InverseFlowNode interpolated_inverse(double t, const Vec2& p) {
        const double s = opt.grid_spacing;
        const double fx = std::floor(p.x / s), fy = std::floor(p.y / s);
        const long ix = static_cast<long>(fx), iy = static_cast<long>(fy);
        const double wx = p.x / s - fx, wy = p.y / s - fy;
        const InverseFlowNode n00 = node_at(t, ix, iy);
        const InverseFlowNode n10 = node_at(t, ix + 1, iy);
        const InverseFlowNode n01 = node_at(t, ix, iy + 1);
        const InverseFlowNode n11 = node_at(t, ix + 1, iy + 1);
        InverseFlowNode out;
        out.psi = n00.psi * ((1 - wx) * (1 - wy)) + n10.psi * (wx * (1 - wy)) +
                  n01.psi * ((1 - wx) * wy) + n11.psi * (wx * wy);
        out.dpsi = n00.dpsi * ((1 - wx) * (1 - wy)) + n10.dpsi * (wx * (1 - wy)) +
                   n01.dpsi * ((1 - wx) * wy) + n11.dpsi * (wx * wy);
        return out;
    }

    InverseFlowNode inverse(double t, const Vec2& p) {
        if (opt.mode == CompositeMode::Exact) return exact_inverse(t, p);
        return interpolated_inverse(t, p);
    }
};

} // namespace

TimePeriodicHamiltonian compose_perturbed_hamiltonian(const TimePeriodicHamiltonian& h_plus,
                                                      const PerturbationSpec& f,
                                                      const CompositeOptions& opt) {
    auto state = std::make_shared<CompositeState>();
    state->h_plus = h_plus;
    state->pert = f.profile;
    state->opt = opt;

    auto eval = [state](double t, double x, double y) {
        const InverseFlowNode n = state->inverse(t, {x, y});
        return state->h_plus.value(t, SurfacePoint(x, y)) +
               state->pert.value(t, SurfacePoint(n.psi));
    };
    auto grad = [state](double t, double x, double y) -> Vec2 {
        const SurfacePoint p(x, y);
        const InverseFlowNode n = state->inverse(t, {x, y});
        const Vec2 gH = state->h_plus.gradient(t, p);
        const Vec2 gF = state->pert.gradient(t, SurfacePoint(n.psi));
        // grad (F o psi) = (D psi)^T grad F(psi)
        const Mat2& d = n.dpsi;
        return {gH.x + d.a * gF.x + d.c * gF.y, gH.y + d.b * gF.x + d.d * gF.y};
    };
    return TimePeriodicHamiltonian(h_plus.surface(), eval, h_plus.normalization(), grad);
}

PerturbedSystem make_perturbed_system(const TimePeriodicHamiltonian& h_plus,
                                      const PerturbationSpec& f) {
    return {h_plus, f.profile, f.amplitude};
}

std::pair<SurfacePoint, Mat2> PerturbedSystem::time_k_map_with_jacobian(
    const SurfacePoint& p, int k, double step, const IntegratorOptions& opt) const {
    SurfacePoint z = p;
    Mat2 M = Mat2::identity();
    for (int unit = 0; unit < k; ++unit) {
        if (amplitude != 0.0) {
            auto [w, Mw] = flow_map_with_jacobian(perturbation, z, 0.0, 1.0, step, opt);
            auto [q, Mq] = flow_map_with_jacobian(h_plus, w, 0.0, 1.0, step, opt);
            M = Mq * (Mw * M);
            z = q;
        } else {
            auto [q, Mq] = flow_map_with_jacobian(h_plus, z, 0.0, 1.0, step, opt);
            M = Mq * M;
            z = q;
        }
    }
    return {z, M};
}

PeriodicOrbit PerturbedSystem::promote_root(const SurfacePoint& root, int k,
                                            const OrbitSearchOptions& opt) const {
    PeriodicOrbit orb;
    orb.seed = root;
    orb.period_k = k;

    // gamma(t) = phi_plus^t(w(t)) with w the perturbation flow; sampled at
    // the integration step so actions match the unperturbed quadrature
    double h_integral = 0.0;
    if (amplitude == 0.0) {
        orb.samples = integrate_flow(h_plus, root, 0.0, static_cast<double>(k), opt.step,
                                     opt.integrator);
        for (std::size_t i = 0; i + 1 < orb.samples.size(); ++i) {
            const double v0 = h_plus.value(orb.samples.times[i], orb.samples.points[i]);
            const double v1 = h_plus.value(orb.samples.times[i + 1], orb.samples.points[i + 1]);
            h_integral += 0.5 * (v0 + v1) * (orb.samples.times[i + 1] - orb.samples.times[i]);
        }
    } else {
        const Trajectory wtraj =
            integrate_flow(perturbation, root, 0.0, static_cast<double>(k), opt.step,
                           opt.integrator);
        Trajectory traj;
        traj.step = opt.step;
        const std::size_t total = wtraj.size();
        traj.times = wtraj.times;
        traj.points.resize(total);
        double prev_val = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            const double t = traj.times[i];
            const SurfacePoint& w = wtraj.points[i];
            const SurfacePoint g =
                (t == 0.0) ? w : flow_map(h_plus, w, 0.0, t, opt.step, opt.integrator);
            traj.points[i] = g;
            const double val = h_plus.value(t, g) + perturbation.value(t, w);
            if (i > 0) h_integral += 0.5 * (prev_val + val) * (traj.times[i] - traj.times[i - 1]);
            prev_val = val;
        }
        orb.samples = std::move(traj);
    }

    auto [endpoint, M] = time_k_map_with_jacobian(root, k, opt.step, opt.integrator);
    orb.monodromy = M;
    orb.multipliers = eigenvalues_2x2(M);
    auto [type, nondeg] = classify_multipliers(orb.multipliers, opt.tol_eig);
    orb.type = type;
    orb.nondegenerate = nondeg;
    Vec2 d = endpoint.lift - root.lift;
    if (h_plus.surface() == Surface::Torus) {
        d.x -= std::round(d.x);
        d.y -= std::round(d.y);
    }
    orb.residual = d.norm();
    orb.homotopy_class = free_homotopy_class(h_plus.surface(), orb);
    if (orb.homotopy_class.contractible())
        orb.action = -loop_signed_area(orb.samples) + h_integral;
    return orb;
}

// ---- experiment ---------------------------------------------------------

namespace {

std::string answer_str(ConjugacyAnswer a) {
    switch (a) {
        case ConjugacyAnswer::Yes: return "yes";
        case ConjugacyAnswer::No: return "no";
        default: return "unknown";
    }
}

} // namespace

StabilityRun run_stability_experiment(const StabilityScenarioConfig& cfg) {
    StabilityRun run;
    const TimePeriodicHamiltonian h_base = make_preset(cfg.preset, cfg.preset_params);
    const int k = cfg.promote_k;
    OrbitSearchOptions search = cfg.search;

    // --- unperturbed side: all period-k orbit groups -----------------------
    const std::vector<SurfacePoint> seed_pts = cfg.seeds.generate(h_base.surface());
    const KMapFn map_plus = [&](const SurfacePoint& p) {
        return time_k_map_with_jacobian(h_base, p, k, search.step, search.integrator);
    };
    RootSearchResult roots = newton_root_search(map_plus, h_base.surface(), seed_pts, search);
    auto time1 = [&](const SurfacePoint& p) {
        return flow_map(h_base, p, 0.0, 1.0, search.step, search.integrator);
    };
    const auto groups = group_orbit_roots(roots.roots, h_base.surface(), time1, search.merge_radius);

    OrbitSet found;
    found.surface = h_base.surface();
    found.degenerate_seeds = roots.degenerate_seeds;
    found.failed_seeds = roots.failed_seeds;
    std::vector<int> group_size;
    for (const auto& g : groups) {
        PeriodicOrbit orb = promote_root(h_base, g.front(), k, search);
        if (!orb.nondegenerate) continue;
        group_size.push_back(static_cast<int>(g.size()));
        found.orbits.push_back(std::move(orb));
    }
    run.orbits_plus_all = found;

    if (found.orbits.empty()) {
        run.isolation_ok = false;
        return run;
    }

    // --- target subset and isolation --------------------------------------
    std::vector<double> actions;
    for (const auto& o : found.orbits) actions.push_back(o.action.value_or(0.0));

    auto type_ok = [&](const PeriodicOrbit& o) {
        if (cfg.target_type == "any") return true;
        if (cfg.target_type == "hyperbolic") return o.type == OrbitType::Hyperbolic;
        if (cfg.target_type == "elliptic") return o.type == OrbitType::Elliptic;
        return true;
    };
    int target = -1;
    double best_key = 1e18;
    for (std::size_t i = 0; i < found.orbits.size(); ++i) {
        if (!type_ok(found.orbits[i])) continue;
        if (group_size[i] != k && cfg.promote_k > 1) continue; // want a genuine period-k orbit
        double key;
        if (cfg.target_action)
            key = std::abs(actions[i] - *cfg.target_action);
        else
            key = actions[i];
        if (target < 0 || key < best_key) { target = static_cast<int>(i); best_key = key; }
    }
    if (target < 0) {
        run.isolation_ok = false;
        return run;
    }
    const double kappa = actions[target];
    // companionship closure: every orbit at the same action level joins Y
    std::vector<bool> members(found.orbits.size(), false);
    members[target] = true;
    for (std::size_t i = 0; i < found.orbits.size(); ++i)
        if (std::abs(actions[i] - kappa) <= 1e-8) members[i] = true;
    run.target_idx.clear();
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i]) run.target_idx.push_back(i);

    double min_gap = 1e18;
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = i + 1; j < actions.size(); ++j) {
            const double gap = std::abs(actions[i] - actions[j]);
            if (gap > 1e-8 && gap < min_gap) min_gap = gap;
        }
    if (min_gap > 1e17) min_gap = 1.0;
    run.min_positive_gap = min_gap;
    run.epsilon = (cfg.epsilon > 0.0) ? cfg.epsilon : min_gap / 100.0;

    IsolationReport iso =
        action_gaps_and_isolation(found, actions, members, 100.0 * run.epsilon, 1e-8);
    run.isolation_ok = iso.isolated;
    bool actions_nonzero = true;
    if (cfg.require_nonzero_action) {
        for (std::size_t i : run.target_idx)
            if (std::abs(actions[i]) <= 1e-8) actions_nonzero = false;
    }

    // --- braid of the target orbit -----------------------------------------
    OrbitSet y_plus;
    y_plus.surface = found.surface;
    for (std::size_t i : run.target_idx) y_plus.orbits.push_back(found.orbits[i]);
    SuspendOptions sus;
    sus.samples_per_period = cfg.braid_samples;
    const GeometricBraid braid_plus = suspend_orbits(y_plus, sus);
    ExtractOptions ext;
    ext.projection_angle = cfg.projection_angle;
    const BraidWord word_plus = braid_word_robust(braid_plus, ext);
    GrowthEstimate gamma_plus;
    if (word_plus.n_strands >= 2)
        gamma_plus = gamma_estimate(word_plus, cfg.gamma_iterations);

    // --- amplitude sweep ----------------------------------------------------
    const TimePeriodicHamiltonian profile = make_preset("bump", cfg.perturbation_params);
    for (double lambda : cfg.amplitudes) {
        StabilityReport rep;
        rep.amplitude = lambda;
        rep.epsilon = run.epsilon;
        rep.min_positive_gap = run.min_positive_gap;

        const PerturbationSpec pert =
            make_perturbation(profile, lambda, cfg.hofer_t_grid, cfg.hofer_space_grid);
        rep.hofer_bound = pert.hofer_bound;
        // bi-invariance: d_Hofer at the promoted level is at most k times the
        // base perturbation norm
        const bool hofer_ok = k * pert.hofer_bound < run.epsilon;
        rep.hypothesis_met = run.isolation_ok && actions_nonzero && hofer_ok;
        if (!run.isolation_ok) rep.hypothesis_note = "isolation failed";
        else if (!actions_nonzero) rep.hypothesis_note = "zero action in target set";
        else if (!hofer_ok) rep.hypothesis_note = "perturbation exceeds the Hofer window";

        const PerturbedSystem sys = make_perturbed_system(h_base, pert);

        // seeds: every unperturbed root plus a deterministic jitter ring
        std::vector<SurfacePoint> minus_seeds;
        for (const auto& r : roots.roots) {
            minus_seeds.push_back(r);
            const double j = 20.0 * search.merge_radius;
            minus_seeds.emplace_back(r.lift.x + j, r.lift.y);
            minus_seeds.emplace_back(r.lift.x - j, r.lift.y);
            minus_seeds.emplace_back(r.lift.x, r.lift.y + j);
            minus_seeds.emplace_back(r.lift.x, r.lift.y - j);
        }
        const KMapFn map_minus = [&](const SurfacePoint& p) {
            return sys.time_k_map_with_jacobian(p, k, search.step, search.integrator);
        };
        RootSearchResult mroots =
            newton_root_search(map_minus, h_base.surface(), minus_seeds, search);
        auto time1_minus = [&](const SurfacePoint& p) {
            return sys.time_k_map_with_jacobian(p, 1, search.step, search.integrator).first;
        };
        const auto mgroups =
            group_orbit_roots(mroots.roots, h_base.surface(), time1_minus, search.merge_radius);

        std::vector<PeriodicOrbit> morbits;
        for (const auto& g : mgroups) {
            PeriodicOrbit orb = sys.promote_root(g.front(), k, search);
            if (orb.nondegenerate) morbits.push_back(std::move(orb));
        }

        // match the target group orbits by action window and by continuation
        OrbitSet y_minus;
        y_minus.surface = found.surface;
        for (const auto& mo : morbits) {
            const double a = mo.action.value_or(1e18);
            const bool window = std::abs(a - kappa) < 2.0 * run.epsilon;
            bool continuation = false;
            for (std::size_t i : run.target_idx)
                if (surface_distance(found.surface, mo.seed, found.orbits[i].seed) < 0.05)
                    continuation = true;
            if (window || continuation) {
                MatchedOrbit match;
                match.seed_minus = mo.seed;
                match.action_minus = a;
                match.action_plus = kappa;
                match.drift = std::abs(a - kappa);
                match.window_matched = window;
                match.continuation_matched = continuation;
                // nearest target seed for the record
                double best = 1e18;
                for (std::size_t i : run.target_idx) {
                    const double d =
                        surface_distance(found.surface, mo.seed, found.orbits[i].seed);
                    if (d < best) { best = d; match.seed_plus = found.orbits[i].seed; }
                }
                rep.matches.push_back(match);
                rep.max_drift = std::max(rep.max_drift, match.drift);
                if (!window) rep.extra_minus_in_window++;
                y_minus.orbits.push_back(mo);
            }
        }
        int strands_plus = 0, strands_minus = 0;
        for (const auto& o : y_plus.orbits) strands_plus += o.period_k;
        for (const auto& o : y_minus.orbits) strands_minus += o.period_k;
        rep.unmatched_plus = std::max(0, strands_plus - strands_minus);

        rep.word_plus = word_plus.str();
        rep.n_strands = word_plus.n_strands;
        rep.gamma_plus = gamma_plus.rate;

        if (strands_minus == strands_plus && !y_minus.orbits.empty()) {
            const GeometricBraid braid_minus = suspend_orbits(y_minus, sus);
            const BraidWord word_minus = braid_word_robust(braid_minus, ext);
            rep.word_minus = word_minus.str();
            const ConjugacyResult conj =
                are_conjugate(word_plus, word_minus, cfg.conjugacy_budget);
            rep.conjugacy = answer_str(conj.answer);
            if (conj.witness) rep.witness = conj.witness->str();
            rep.braid_persisted = conj.answer == ConjugacyAnswer::Yes;
            if (word_minus.n_strands >= 2)
                rep.gamma_minus = gamma_estimate(word_minus, cfg.gamma_iterations).rate;
        } else {
            rep.conjugacy = "mismatch";
            rep.braid_persisted = false;
        }
        rep.falsified = rep.hypothesis_met && !rep.braid_persisted &&
                        rep.conjugacy != "unknown";
        run.any_falsified = run.any_falsified || rep.falsified;
        run.reports.push_back(std::move(rep));
    }
    return run;
}

} // namespace braidstab
