#include "braidstab/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "braidstab/errors.hpp"

namespace braidstab {

std::string orbit_type_name(OrbitType t) {
    switch (t) {
        case OrbitType::Elliptic: return "elliptic";
        case OrbitType::Hyperbolic: return "hyperbolic";
        default: return "parabolic";
    }
}

std::string HomotopyClass::str() const {
    if (trivial) return "trivial";
    return "(" + std::to_string(wx) + "," + std::to_string(wy) + ")";
}

std::vector<SurfacePoint> SeedGrid::generate(Surface s) const {
    std::vector<SurfacePoint> out;
    if (grid_enabled) {
        if (s == Surface::Disk) {
            for (int i = 0; i < nx; ++i)
                for (int j = 0; j < ny; ++j) {
                    const double x = -radius + 2.0 * radius * (i + 0.5) / nx;
                    const double y = -radius + 2.0 * radius * (j + 0.5) / ny;
                    if (x * x + y * y <= radius * radius) out.emplace_back(x, y);
                }
        } else {
            for (int i = 0; i < nx; ++i)
                for (int j = 0; j < ny; ++j)
                    out.emplace_back((i + 0.5) / nx, (j + 0.5) / ny);
        }
    }
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::pair<OrbitType, bool> classify_multipliers(const ComplexPair& mult, double tol_eig) {
    const double d1 = std::hypot(mult.re1 - 1.0, mult.im1);
    const double d2 = std::hypot(mult.re2 - 1.0, mult.im2);
    const bool nondeg = d1 > tol_eig && d2 > tol_eig;
    OrbitType type;
    if (mult.im1 != 0.0) {
        // complex pair on the unit circle (area preservation)
        type = OrbitType::Elliptic;
    } else if (std::abs(std::abs(mult.re1) - 1.0) <= tol_eig &&
               std::abs(std::abs(mult.re2) - 1.0) <= tol_eig) {
        type = OrbitType::Parabolic;
    } else {
        type = OrbitType::Hyperbolic;
    }
    return {type, nondeg};
}

namespace {

double condition_2x2(const Mat2& m) {
    // Frobenius-based bound, enough for a degeneracy cutoff
    const double fro = std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
    const double dt = std::abs(m.det());
    if (dt < 1e-300) return std::numeric_limits<double>::infinity();
    return fro * fro / dt;
}

struct NewtonOutcome {
    bool converged = false;
    bool degenerate = false;
    SurfacePoint root;
    double residual = 0.0;
};

NewtonOutcome newton_from_seed(const KMapFn& map, Surface surface, const SurfacePoint& seed,
                               const OrbitSearchOptions& opt) {
    NewtonOutcome out;
    SurfacePoint p = seed;
    for (int it = 0; it < opt.max_newton; ++it) {
        Vec2 g;
        Mat2 jac;
        try {
            auto [q, M] = map(p);
            g = q.lift - p.lift;
            if (surface == Surface::Torus) {
                g.x -= std::round(g.x);
                g.y -= std::round(g.y);
            }
            jac = M;
        } catch (const std::exception&) {
            return out;
        }
        out.residual = g.norm();
        if (out.residual <= opt.tol_orbit) {
            out.converged = true;
            out.root = p;
            return out;
        }
        const Mat2 A{jac.a - 1.0, jac.b, jac.c, jac.d - 1.0};
        if (condition_2x2(A) > opt.cond_limit) {
            out.degenerate = true;
            return out;
        }
        Vec2 delta = A.inverse().apply(g);
        // conservative damping against wild seeds
        const double max_step = 0.5;
        if (delta.norm() > max_step) delta = delta * (max_step / delta.norm());
        p = SurfacePoint(p.lift - delta);
        if (surface == Surface::Disk && p.lift.norm() > 1.2) return out;
    }
    return out;
}

} // namespace

RootSearchResult newton_root_search(const KMapFn& map, Surface surface,
                                    const std::vector<SurfacePoint>& seeds,
                                    const OrbitSearchOptions& opt) {
    if (seeds.empty()) throw NumericDomainError("newton_root_search: empty seed set");
    std::vector<NewtonOutcome> outcomes(seeds.size());
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            outcomes[i] = newton_from_seed(map, surface, seeds[i], opt);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (seeds.size() + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(seeds.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i)
                    outcomes[i] = newton_from_seed(map, surface, seeds[i], opt);
            });
        }
        for (auto& th : pool) th.join();
    }

    RootSearchResult res;
    for (const auto& oc : outcomes) {
        if (oc.degenerate) { res.degenerate_seeds++; continue; }
        if (!oc.converged) { res.failed_seeds++; continue; }
        bool dup = false;
        for (const auto& r : res.roots) {
            if (surface_distance(surface, r, oc.root) < opt.merge_radius) { dup = true; break; }
        }
        if (!dup) res.roots.push_back(oc.root);
    }
    std::sort(res.roots.begin(), res.roots.end(), [&](const SurfacePoint& a, const SurfacePoint& b) {
        const Vec2 ra = a.reduced(surface), rb = b.reduced(surface);
        if (ra.x != rb.x) return ra.x < rb.x;
        return ra.y < rb.y;
    });
    return res;
}

PeriodicOrbit promote_root(const TimePeriodicHamiltonian& H, const SurfacePoint& root, int k,
                           const OrbitSearchOptions& opt) {
    PeriodicOrbit orb;
    orb.seed = root;
    orb.period_k = k;
    orb.samples = integrate_flow(H, root, 0.0, static_cast<double>(k), opt.step, opt.integrator);
    auto [endpoint, M] = time_k_map_with_jacobian(H, root, k, opt.step, opt.integrator);
    orb.monodromy = M;
    orb.multipliers = eigenvalues_2x2(M);
    auto [type, nondeg] = classify_multipliers(orb.multipliers, opt.tol_eig);
    orb.type = type;
    orb.nondegenerate = nondeg;
    Vec2 d = endpoint.lift - root.lift;
    if (H.surface() == Surface::Torus) {
        d.x -= std::round(d.x);
        d.y -= std::round(d.y);
    }
    orb.residual = d.norm();
    orb.homotopy_class = free_homotopy_class(H.surface(), orb);
    if (orb.homotopy_class.contractible()) orb.action = orbit_action(H, orb);
    return orb;
}

OrbitSet find_periodic_points(const TimePeriodicHamiltonian& H, int k, const SeedGrid& seeds,
                              const OrbitSearchOptions& opt) {
    const std::vector<SurfacePoint> seed_pts = seeds.generate(H.surface());
    if (seed_pts.empty()) throw NumericDomainError("find_periodic_points: empty seed grid");

    const KMapFn map = [&H, k, &opt](const SurfacePoint& p) {
        return time_k_map_with_jacobian(H, p, k, opt.step, opt.integrator);
    };
    RootSearchResult rs = newton_root_search(map, H.surface(), seed_pts, opt);

    OrbitSet set;
    set.surface = H.surface();
    set.degenerate_seeds = rs.degenerate_seeds;
    set.failed_seeds = rs.failed_seeds;

    for (const auto& r : rs.roots) {
        PeriodicOrbit orb = promote_root(H, r, k, opt);
        if (!orb.nondegenerate) { set.degenerate_seeds++; continue; }
        set.orbits.push_back(std::move(orb));
    }

    // sup-distance dedup over the whole trajectory (same orbit found from
    // different phases still differs as a parametrized loop, keep those)
    set.shared_homotopy_class = true;
    for (std::size_t i = 1; i < set.orbits.size(); ++i)
        if (!(set.orbits[i].homotopy_class == set.orbits[0].homotopy_class))
            set.shared_homotopy_class = false;
    return set;
}

std::vector<std::vector<SurfacePoint>> group_orbit_roots(
    const std::vector<SurfacePoint>& roots, Surface surface,
    const std::function<SurfacePoint(const SurfacePoint&)>& time1, double merge_radius) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> next(n, -1);
    for (int i = 0; i < n; ++i) {
        const SurfacePoint img = time1(roots[i]);
        double best = 1e18;
        for (int j = 0; j < n; ++j) {
            const double d = surface_distance(surface, img, roots[j]);
            if (d < best) { best = d; next[i] = j; }
        }
        if (best > 100 * merge_radius) next[i] = i;
    }
    std::vector<bool> used(n, false);
    std::vector<std::vector<SurfacePoint>> groups;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<SurfacePoint> cycle;
        int j = i;
        while (!used[j]) {
            used[j] = true;
            cycle.push_back(roots[j]);
            j = next[j];
        }
        groups.push_back(std::move(cycle));
    }
    return groups;
}

double loop_signed_area(const Trajectory& loop) {
    double twice_area = 0.0;
    for (std::size_t i = 0; i + 1 < loop.points.size(); ++i) {
        const Vec2& a = loop.points[i].lift;
        const Vec2& b = loop.points[i + 1].lift;
        twice_area += a.cross(b);
    }
    // close the polygon
    const Vec2& last = loop.points.back().lift;
    const Vec2& first = loop.points.front().lift;
    twice_area += last.cross(first);
    return 0.5 * twice_area;
}

double orbit_action(const TimePeriodicHamiltonian& H, const PeriodicOrbit& orbit) {
    if (!orbit.homotopy_class.contractible())
        throw UnsupportedClassError("orbit_action: non-contractible class " +
                                    orbit.homotopy_class.str());
    const Trajectory& tr = orbit.samples;
    const double area = loop_signed_area(tr);
    // trapezoid of H(t, gamma(t)) over [0, k]
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < tr.size(); ++i) {
        const double h0 = H.value(tr.times[i], tr.points[i]);
        const double h1 = H.value(tr.times[i + 1], tr.points[i + 1]);
        integral += 0.5 * (h0 + h1) * (tr.times[i + 1] - tr.times[i]);
    }
    return -area + integral;
}

HomotopyClass free_homotopy_class(Surface surface, const PeriodicOrbit& orbit) {
    HomotopyClass cls;
    if (surface == Surface::Disk) return cls;
    cls.trivial = false;
    const Vec2 d = orbit.samples.back().lift - orbit.samples.front().lift;
    const double rx = std::round(d.x), ry = std::round(d.y);
    if (std::abs(d.x - rx) > 0.25 || std::abs(d.y - ry) > 0.25)
        throw SamplingResolutionError("lift displacement too far from an integer pair");
    cls.wx = static_cast<int>(rx);
    cls.wy = static_cast<int>(ry);
    return cls;
}

IsolationReport action_gaps_and_isolation(const OrbitSet& orbits,
                                          const std::vector<double>& actions, double epsilon,
                                          double tol_action) {
    std::vector<bool> all(actions.size(), true);
    return action_gaps_and_isolation(orbits, actions, all, epsilon, tol_action);
}

IsolationReport action_gaps_and_isolation(const OrbitSet& orbits,
                                          const std::vector<double>& actions,
                                          const std::vector<bool>& members, double epsilon,
                                          double tol_action) {
    if (orbits.size() != actions.size() || members.size() != actions.size())
        throw DimensionError("action_gaps_and_isolation: size mismatch");
    for (std::size_t i = 1; i < orbits.size(); ++i)
        if (!(orbits.orbits[i].homotopy_class == orbits.orbits[0].homotopy_class))
            throw ClassMismatchError("isolation requires a single homotopy class");

    IsolationReport rep;
    rep.epsilon = epsilon;
    rep.tol_action = tol_action;
    const std::size_t n = actions.size();
    rep.gaps.assign(n, std::vector<double>(n, 0.0));
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double gap = std::abs(actions[i] - actions[j]);
            rep.gaps[i][j] = gap;
            if (i != j && gap > tol_action && gap < epsilon) ok = false;
        }
    }
    // companionship: zero-gap neighbours of members must be members
    for (std::size_t i = 0; i < n && ok; ++i) {
        if (!members[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!members[j] && rep.gaps[i][j] <= tol_action) { ok = false; break; }
        }
    }
    rep.isolated = ok;
    return rep;
}

} // namespace braidstab
