#ifndef BRAIDSTAB_STABILITY_HPP
#define BRAIDSTAB_STABILITY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidstab/braid_geometry.hpp"
#include "braidstab/gamma.hpp"
#include "braidstab/garside.hpp"
#include "braidstab/orbits.hpp"
#include "braidstab/presets.hpp"

namespace braidstab {

// H(t,p) = k G(kt mod 1, p); its time-1 map is the k-th power of G's
// time-1 map, converting period-k orbits into 1-periodic ones.
TimePeriodicHamiltonian kth_power_hamiltonian(const TimePeriodicHamiltonian& G, int k);

// Perturbation profile with amplitude and its declared Hofer bound.
struct PerturbationSpec {
    TimePeriodicHamiltonian profile; // F, vanishing near the disk boundary
    double amplitude = 0.0;          // lambda
    double hofer_bound = 0.0;        // hofer_norm(lambda F), grid estimate
};

PerturbationSpec make_perturbation(const TimePeriodicHamiltonian& profile, double amplitude,
                                   int t_grid = 64, int space_grid = 129);

enum class CompositeMode { MemoizedGrid, Exact };

struct CompositeOptions {
    CompositeMode mode = CompositeMode::MemoizedGrid;
    double grid_spacing = 1.0 / 256.0;
    double back_step = 1e-3; // backward integration step for the inverse flow
};

// H_minus(t,p) = H_plus(t,p) + lambda F(t, (phi_plus^t)^{-1}(p)); the inverse
// flow is evaluated by backward integration, either exactly per call or
// through a lazily filled per-time-slice grid with bilinear interpolation.
// The time-1 map of the result is flow(H_plus) o flow(lambda F).
TimePeriodicHamiltonian compose_perturbed_hamiltonian(const TimePeriodicHamiltonian& h_plus,
                                                      const PerturbationSpec& f,
                                                      const CompositeOptions& opt = {});

// Composition-structure fast paths for the perturbed system: the time-k map
// is (phi_plus^1 o phi_F^1)^k and trajectories come from
// gamma(t) = phi_plus^t(phi_F^t(p0)), so no inverse flow is ever needed.
struct PerturbedSystem {
    TimePeriodicHamiltonian h_plus;
    TimePeriodicHamiltonian perturbation; // lambda F as a Hamiltonian
    double amplitude = 0.0;

    std::pair<SurfacePoint, Mat2> time_k_map_with_jacobian(const SurfacePoint& p, int k,
                                                           double step,
                                                           const IntegratorOptions& opt = {}) const;
    // gamma samples over [0,k] plus the action of the orbit for H_minus
    PeriodicOrbit promote_root(const SurfacePoint& root, int k,
                               const OrbitSearchOptions& opt) const;
};

PerturbedSystem make_perturbed_system(const TimePeriodicHamiltonian& h_plus,
                                      const PerturbationSpec& f);

// ---- the braid persistence experiment ----------------------------------

struct StabilityScenarioConfig {
    std::string preset = "resonant-rotation";
    ParamMap preset_params;
    int promote_k = 3;              // period promoted via the k-th power trick
    SeedGrid seeds;
    OrbitSearchOptions search;
    // target subset: orbit type filter ("hyperbolic", "elliptic", "any");
    // among qualifying period-k groups the smallest action wins
    std::string target_type = "any";
    std::optional<double> target_action; // pick the action level nearest this
    double epsilon = 0.0;                // 0 = auto: min positive gap / 100
    bool require_nonzero_action = false; // Theorem-C-style hypothesis
    std::vector<double> amplitudes;
    ParamMap perturbation_params;   // bump parameters for the profile
    int braid_samples = 256;
    double projection_angle = 0.05;
    int gamma_iterations = 12;
    long conjugacy_budget = 4000;
    int hofer_t_grid = 64;
    int hofer_space_grid = 129;
};

struct MatchedOrbit {
    SurfacePoint seed_plus;
    SurfacePoint seed_minus;
    double action_plus = 0.0;
    double action_minus = 0.0;
    double drift = 0.0;
    bool window_matched = false;
    bool continuation_matched = false;
};

struct StabilityReport {
    double amplitude = 0.0;
    double hofer_bound = 0.0;
    double epsilon = 0.0;
    double min_positive_gap = 0.0;
    bool hypothesis_met = false;     // 100*eps isolation (+ nonzero actions if asked)
    std::string hypothesis_note;
    std::vector<MatchedOrbit> matches;
    int unmatched_plus = 0;
    int extra_minus_in_window = 0;
    std::string word_plus;
    std::string word_minus;
    int n_strands = 0;
    std::string conjugacy;           // yes / no / unknown / mismatch
    std::string witness;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double max_drift = 0.0;
    bool braid_persisted = false;
    bool falsified = false;          // hypothesis met but braid changed
};

struct StabilityRun {
    OrbitSet orbits_plus_all;            // everything found for H_plus
    std::vector<std::size_t> target_idx; // indices of the braid set Y_plus
    double epsilon = 0.0;
    double min_positive_gap = 0.0;
    bool isolation_ok = false;
    std::vector<StabilityReport> reports; // one per amplitude
    bool any_falsified = false;
};

StabilityRun run_stability_experiment(const StabilityScenarioConfig& cfg);

} // namespace braidstab

#endif
