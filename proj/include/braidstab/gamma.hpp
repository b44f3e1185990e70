#ifndef BRAIDSTAB_GAMMA_HPP
#define BRAIDSTAB_GAMMA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidstab/free_group.hpp"

namespace braidstab {

struct ProbeTrace {
    std::string label;
    std::vector<std::uint64_t> lengths; // cyclically reduced, per iteration
    double rate = 0.0;
    bool saturated = false;
};

// Word-length growth data for the induced free-group action of a braid.
// The rate is a lower-bound estimate for h_top of any diffeomorphism
// realizing the braid.
struct GrowthEstimate {
    int rank = 0;
    int iterations = 0;
    double rate = 0.0;            // max over probes, clamped at 0
    bool saturated = false;       // memory cap reached somewhere
    std::vector<ProbeTrace> probes;
};

struct GammaOptions {
    std::size_t memory_cap = std::size_t(1) << 28; // letters per probe word
    // The probe set is the generators plus products of adjacent generators.
    // Puncture generators alone map to conjugates of single generators, so
    // their cyclically reduced length is constantly 1; the pair products
    // carry the stretching.
    bool include_pair_probes = true;
};

// Iterates the Artin endomorphism N times on each probe, recording
// cyclically reduced lengths, and fits the rate by least squares on
// log L over the tail half of the iterations.
GrowthEstimate gamma_estimate(const BraidWord& w, int iterations, const GammaOptions& opt = {});

// Least-squares slope of log(values) against the index over [lo, hi].
double log_slope(const std::vector<std::uint64_t>& values, int lo, int hi);

} // namespace braidstab

#endif
