#ifndef BRAIDSTAB_BRAID_GEOMETRY_HPP
#define BRAIDSTAB_BRAID_GEOMETRY_HPP

#include <vector>

#include "braidstab/braid_word.hpp"
#include "braidstab/orbits.hpp"

namespace braidstab {

// Braid of an orbit set: n strands sampled over t in [0,1], each strand a
// graph over t. Strand points are lift coordinates.
struct GeometricBraid {
    Surface surface = Surface::Disk;
    int samples_per_strand = 0;
    std::vector<std::vector<Vec2>> strands; // strands[s][i] at t = i/(samples-1)

    int n_strands() const { return static_cast<int>(strands.size()); }
    double time_of(int i) const { return static_cast<double>(i) / (samples_per_strand - 1); }
};

struct SuspendOptions {
    int samples_per_period = 256;
    double collision_radius = 1e-5;
};

// Strands xi_i = {(t, gamma_i(t))}; a period-k orbit contributes k strands by
// slicing its [0,k] trajectory at unit times. Orbits within collision_radius
// at a common time raise CollisionError.
GeometricBraid suspend_orbits(const OrbitSet& orbits, const SuspendOptions& opt = {});

struct ExtractOptions {
    double projection_angle = 0.05;
    int max_retries = 8;
    double retry_delta = 1e-3; // deterministic angle perturbation schedule
};

// Crossing-diagram extraction: strands ordered by projection onto the axis at
// the given angle; each transversal coincidence of adjacent projections emits
// sigma_i^{+-1}, positive = counterclockwise interchange. Crossing times by
// linear interpolation; a crossing counts only if the sign change persists at
// the neighbouring samples. Non-generic projections raise GenericityError.
BraidWord braid_word_from_geometric(const GeometricBraid& braid, double projection_angle);

// Same, with the deterministic retry-on-genericity-failure schedule.
BraidWord braid_word_robust(const GeometricBraid& braid, const ExtractOptions& opt = {});

// Extracts words at both angles (with retry) and reports whether they are
// conjugate in B_n.
bool projection_invariance_check(const GeometricBraid& braid, double theta1, double theta2,
                                 long budget = 4000);

// Synthetic rigid-rotation braid: points at the given angles on a circle of
// radius r, rotated by `angle` (counterclockwise for positive) over t in [0,1].
GeometricBraid rigid_rotation_braid(const std::vector<double>& point_angles, double radius,
                                    double rotation_angle, int samples = 512);

} // namespace braidstab

#endif
