#include "braidstab/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "braidstab/errors.hpp"

namespace braidstab {

double log_slope(const std::vector<std::uint64_t>& values, int lo, int hi) {
    // least squares on (n, log L_n), n in [lo, hi]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = lo; n <= hi && n < static_cast<int>(values.size()); ++n) {
        const double x = n;
        const double y = std::log(static_cast<double>(std::max<std::uint64_t>(values[n], 1)));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    if (count < 2) return 0.0;
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (count * sxy - sx * sy) / denom;
}

GrowthEstimate gamma_estimate(const BraidWord& w, int iterations, const GammaOptions& opt) {
    if (iterations < 4) throw NumericDomainError("gamma_estimate: need at least 4 iterations");
    const FreeGroupEndo endo = artin_action(w);
    const int rank = endo.rank;

    std::vector<std::pair<std::string, FWord>> probes;
    for (int i = 1; i <= rank; ++i)
        probes.push_back({"x" + std::to_string(i), {static_cast<std::int8_t>(i)}});
    if (opt.include_pair_probes) {
        for (int i = 1; i < rank; ++i)
            probes.push_back({"x" + std::to_string(i) + "x" + std::to_string(i + 1),
                              {static_cast<std::int8_t>(i), static_cast<std::int8_t>(i + 1)}});
    }

    GrowthEstimate est;
    est.rank = rank;
    est.iterations = iterations;

    for (auto& [label, start] : probes) {
        ProbeTrace trace;
        trace.label = label;
        FWord word = start;
        trace.lengths.push_back(cyclically_reduce(word).size());
        for (int n = 1; n <= iterations; ++n) {
            try {
                word = endo.apply(word, opt.memory_cap);
            } catch (const std::length_error&) {
                trace.saturated = true;
                break;
            }
            trace.lengths.push_back(cyclically_reduce(word).size());
        }
        const int last = static_cast<int>(trace.lengths.size()) - 1;
        trace.rate = std::max(0.0, log_slope(trace.lengths, last / 2, last));
        est.saturated = est.saturated || trace.saturated;
        est.rate = std::max(est.rate, trace.rate);
        est.probes.push_back(std::move(trace));
    }
    return est;
}

} // namespace braidstab
