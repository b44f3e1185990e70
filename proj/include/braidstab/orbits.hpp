#ifndef BRAIDSTAB_ORBITS_HPP
#define BRAIDSTAB_ORBITS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidstab/integrator.hpp"

namespace braidstab {

enum class OrbitType { Elliptic, Hyperbolic, Parabolic };

std::string orbit_type_name(OrbitType t);

// Homotopy class of a closed orbit: integer winding on the torus, the
// trivial marker on the disk.
struct HomotopyClass {
    bool trivial = true; // disk marker
    int wx = 0;
    int wy = 0;

    bool operator==(const HomotopyClass& o) const {
        return trivial == o.trivial && wx == o.wx && wy == o.wy;
    }
    bool contractible() const { return trivial || (wx == 0 && wy == 0); }
    std::string str() const;
};

// Period-k orbit of the time-1 map: seed, dense samples over [0,k],
// monodromy of the k-fold map, Floquet multipliers, action (when defined).
struct PeriodicOrbit {
    SurfacePoint seed;
    int period_k = 1;
    Trajectory samples;
    Mat2 monodromy;
    ComplexPair multipliers;
    bool nondegenerate = false;
    OrbitType type = OrbitType::Parabolic;
    std::optional<double> action;
    HomotopyClass homotopy_class;
    double residual = 0.0;
};

struct OrbitSet {
    Surface surface = Surface::Disk;
    std::vector<PeriodicOrbit> orbits;
    bool shared_homotopy_class = true;
    int degenerate_seeds = 0;   // seeds rejected as degenerate clusters
    int failed_seeds = 0;       // seeds with no Newton convergence

    std::size_t size() const { return orbits.size(); }
};

struct OrbitSearchOptions {
    double step = 1e-3;          // integration step
    double tol_orbit = 1e-10;    // Newton residual target
    double merge_radius = 1e-4;  // dedup distance between roots
    double tol_eig = 1e-6;       // multiplier distance to 1 for degeneracy
    double cond_limit = 1e8;     // Newton matrix condition bound
    int max_newton = 30;
    int threads = 1;
    IntegratorOptions integrator;
};

struct SeedGrid {
    int nx = 32;
    int ny = 32;
    // disk: radius of the seeded disk; torus: the fundamental domain
    double radius = 0.95;
    std::vector<SurfacePoint> extra; // explicit seeds appended to the grid
    bool grid_enabled = true;

    std::vector<SurfacePoint> generate(Surface s) const;
};

// Multiplier classification against tol_eig.
std::pair<OrbitType, bool> classify_multipliers(const ComplexPair& mult, double tol_eig);

// Generic root search core: the map is any "time-k map with Jacobian".
using KMapFn = std::function<std::pair<SurfacePoint, Mat2>(const SurfacePoint&)>;

struct RootSearchResult {
    std::vector<SurfacePoint> roots; // deduplicated, deterministically ordered
    int degenerate_seeds = 0;
    int failed_seeds = 0;
};

RootSearchResult newton_root_search(const KMapFn& map, Surface surface,
                                    const std::vector<SurfacePoint>& seeds,
                                    const OrbitSearchOptions& opt);

// Partition period-k roots into orbits of the given time-1 map; each group
// lists the cycle starting from its lexicographically smallest root.
std::vector<std::vector<SurfacePoint>> group_orbit_roots(
    const std::vector<SurfacePoint>& roots, Surface surface,
    const std::function<SurfacePoint(const SurfacePoint&)>& time1, double merge_radius);

// Newton search for roots of phi^k(p) - p from every seed, deduplicated by
// merge_radius. Torus roots solve phi^k(p) - p = w for the nearest integer
// vector w (non-trivial winding classes included). Degenerate clusters are
// counted, not returned. No convergence anywhere gives an empty set.
OrbitSet find_periodic_points(const TimePeriodicHamiltonian& H, int k,
                              const SeedGrid& seeds, const OrbitSearchOptions& opt = {});

// Builds the PeriodicOrbit record (samples, monodromy, class, action) for a
// converged root.
PeriodicOrbit promote_root(const TimePeriodicHamiltonian& H, const SurfacePoint& root, int k,
                           const OrbitSearchOptions& opt = {});

// Action of a contractible k-periodic orbit,
//   A = -(signed area of the loop) + int_0^k H(t, gamma(t)) dt,
// the k-periodic reparametrization convention for A_{kH}. Non-contractible
// classes are refused (capping-dependent).
double orbit_action(const TimePeriodicHamiltonian& H, const PeriodicOrbit& orbit);

// Winding vector from the unwrapped lift displacement (torus); trivial
// marker on the disk. Displacement farther than 0.25 from an integer pair
// raises SamplingResolutionError.
HomotopyClass free_homotopy_class(Surface surface, const PeriodicOrbit& orbit);

struct IsolationReport {
    std::vector<std::vector<double>> gaps;
    bool isolated = false;
    double epsilon = 0.0;
    double tol_action = 1e-8;
    // relative-to-supplied-set semantics; completeness is not certified
    std::string scope = "relative to the supplied orbit set";
};

// Pairwise action gaps and the epsilon-isolation verdict: every gap must be
// 0 (within tol_action) or >= epsilon. Mixed homotopy classes are an error.
IsolationReport action_gaps_and_isolation(const OrbitSet& orbits,
                                          const std::vector<double>& actions, double epsilon,
                                          double tol_action = 1e-8);

// Same check plus the companionship condition for a designated member
// subset: any orbit with zero gap to a member must itself be a member.
IsolationReport action_gaps_and_isolation(const OrbitSet& orbits,
                                          const std::vector<double>& actions,
                                          const std::vector<bool>& members, double epsilon,
                                          double tol_action = 1e-8);

// Signed area of the sampled loop by the shoelace rule (lift coordinates).
double loop_signed_area(const Trajectory& loop);

} // namespace braidstab

#endif
