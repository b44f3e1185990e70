#include "braidstab/braid_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "braidstab/errors.hpp"
#include "braidstab/garside.hpp"

namespace braidstab {

GeometricBraid suspend_orbits(const OrbitSet& orbits, const SuspendOptions& opt) {
    GeometricBraid braid;
    if (orbits.orbits.empty()) return braid;
    braid.surface = orbits.surface;
    braid.samples_per_strand = opt.samples_per_period;
    const int m = opt.samples_per_period;

    for (const auto& orb : orbits.orbits) {
        for (int slice = 0; slice < orb.period_k; ++slice) {
            std::vector<Vec2> strand(m);
            for (int i = 0; i < m; ++i) {
                const double t = slice + static_cast<double>(i) / (m - 1);
                strand[i] = orb.samples.at(t).lift;
            }
            braid.strands.push_back(std::move(strand));
        }
    }

    // pairwise separation at equal times
    for (int a = 0; a < braid.n_strands(); ++a)
        for (int b = a + 1; b < braid.n_strands(); ++b)
            for (int i = 0; i < m; ++i) {
                const double d = (braid.strands[a][i] - braid.strands[b][i]).norm();
                if (d < opt.collision_radius)
                    throw CollisionError("strands collide", a, b, braid.time_of(i));
            }
    return braid;
}

namespace {

struct Crossing {
    double t;
    int slot;  // position slot (0-based): strands at slots slot, slot+1 exchange
    int sign;  // +1 = counterclockwise interchange
};

} // namespace

BraidWord braid_word_from_geometric(const GeometricBraid& braid, double projection_angle) {
    const int n = braid.n_strands();
    if (n == 0) return BraidWord(1, {});
    if (n == 1) return BraidWord(1, {});
    const int m = braid.samples_per_strand;
    const Vec2 axis{std::cos(projection_angle), std::sin(projection_angle)};
    const Vec2 perp{-std::sin(projection_angle), std::cos(projection_angle)};

    // u[s][i]: projection of strand s at sample i
    std::vector<std::vector<double>> u(n, std::vector<double>(m));
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < m; ++i) u[s][i] = braid.strands[s][i].dot(axis);

    // genericity at the endpoints: distinct projections at t=0
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (std::abs(u[a][0] - u[b][0]) < 1e-12)
                throw GenericityError("coincident projections at t=0", 0.0);
            if (std::abs(u[a][m - 1] - u[b][m - 1]) < 1e-12)
                throw GenericityError("coincident projections at t=1", 1.0);
        }

    // collect sign changes of u_a - u_b per unordered pair
    std::vector<Crossing> crossings;
    std::vector<int> order(n);          // strand occupying each slot, evolving in t
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return u[a][0] < u[b][0]; });

    struct PairEvent { double t; int a, b; };
    std::vector<PairEvent> events;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int i = 0; i + 1 < m; ++i) {
                const double d0 = u[a][i] - u[b][i];
                const double d1 = u[a][i + 1] - u[b][i + 1];
                if (d0 == 0.0 || d1 == 0.0)
                    throw GenericityError("projection tangency at a sample", braid.time_of(i));
                if ((d0 > 0) != (d1 > 0)) {
                    // require persistence at the neighbouring samples
                    if (i > 0) {
                        const double dm = u[a][i - 1] - u[b][i - 1];
                        if ((dm > 0) != (d0 > 0)) continue; // jitter, skip
                    }
                    if (i + 2 < m) {
                        const double dp = u[a][i + 2] - u[b][i + 2];
                        if ((dp > 0) != (d1 > 0)) continue;
                    }
                    const double frac = d0 / (d0 - d1);
                    events.push_back({braid.time_of(i) + frac / (m - 1), a, b});
                }
            }
        }
    }
    std::sort(events.begin(), events.end(), [](const PairEvent& x, const PairEvent& y) {
        if (x.t != y.t) return x.t < y.t;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    // simultaneous crossings of disjoint strand pairs commute; sharing a
    // strand is a genuine degeneracy
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        if (events[i + 1].t - events[i].t < 1e-12) {
            const auto& e1 = events[i];
            const auto& e2 = events[i + 1];
            if (e1.a == e2.a || e1.a == e2.b || e1.b == e2.a || e1.b == e2.b)
                throw GenericityError("simultaneous crossings share a strand", e1.t);
        }
    }

    // walk events in time order, maintaining the slot order
    std::vector<int> slot_of(n);
    for (int s = 0; s < n; ++s) slot_of[order[s]] = s;

    BraidWord word(std::max(2, n), {});
    word.n_strands = n;
    for (const auto& ev : events) {
        const int sa = slot_of[ev.a], sb = slot_of[ev.b];
        if (std::abs(sa - sb) != 1)
            throw GenericityError("non-adjacent exchange (missed crossing)", ev.t);
        const int left_slot = std::min(sa, sb);
        const int left = (sa < sb) ? ev.a : ev.b;
        const int right = (sa < sb) ? ev.b : ev.a;
        // transverse coordinate of (right - left) at the crossing time
        const int i = std::min(static_cast<int>(ev.t * (m - 1)), m - 2);
        const double frac = ev.t * (m - 1) - i;
        const Vec2 pl = braid.strands[left][i] * (1 - frac) + braid.strands[left][i + 1] * frac;
        const Vec2 pr = braid.strands[right][i] * (1 - frac) + braid.strands[right][i + 1] * frac;
        const double v = (pr - pl).dot(perp);
        if (std::abs(v) < 1e-12) throw GenericityError("degenerate crossing geometry", ev.t);
        const int sign = v > 0 ? +1 : -1; // ccw interchange is positive
        word.letters.push_back(sign * (left_slot + 1));
        std::swap(slot_of[ev.a], slot_of[ev.b]);
    }
    return word;
}

BraidWord braid_word_robust(const GeometricBraid& braid, const ExtractOptions& opt) {
    double angle = opt.projection_angle;
    for (int attempt = 0;; ++attempt) {
        try {
            return braid_word_from_geometric(braid, angle);
        } catch (const GenericityError&) {
            if (attempt >= opt.max_retries) throw;
            angle += opt.retry_delta * (attempt + 1);
        }
    }
}

bool projection_invariance_check(const GeometricBraid& braid, double theta1, double theta2,
                                 long budget) {
    ExtractOptions o1, o2;
    o1.projection_angle = theta1;
    o2.projection_angle = theta2;
    const BraidWord w1 = braid_word_robust(braid, o1);
    const BraidWord w2 = braid_word_robust(braid, o2);
    if (w1.n_strands != w2.n_strands) return false;
    return are_conjugate(w1, w2, budget).answer == ConjugacyAnswer::Yes;
}

GeometricBraid rigid_rotation_braid(const std::vector<double>& point_angles, double radius,
                                    double rotation_angle, int samples) {
    GeometricBraid braid;
    braid.samples_per_strand = samples;
    for (double phi : point_angles) {
        std::vector<Vec2> strand(samples);
        for (int i = 0; i < samples; ++i) {
            const double t = static_cast<double>(i) / (samples - 1);
            const double a = phi + rotation_angle * t;
            strand[i] = {radius * std::cos(a), radius * std::sin(a)};
        }
        braid.strands.push_back(std::move(strand));
    }
    return braid;
}

} // namespace braidstab
