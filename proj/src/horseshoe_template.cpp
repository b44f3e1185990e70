#include "braidstab/horseshoe_template.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "braidstab/errors.hpp"
#include "braidstab/garside.hpp"

namespace braidstab {

namespace {

// m-adic value of the forward itinerary of the shift of the orbit word by o
double itinerary_value(const SymbolWord& w, int o) {
    const int n = w.period_length();
    double v = 0.0, scale = 1.0;
    for (int k = 0; k < n; ++k) {
        scale /= w.alphabet;
        v += (w.symbol_at(o + k) - 1) * scale;
    }
    return v;
}

} // namespace

TemplateBraid horseshoe_template_braid(const SymbolWord& orbit) {
    const int n = orbit.period_length();
    if (n < 2) throw ConstructionError("template braid needs at least 2 points");

    std::vector<double> value(n);
    for (int o = 0; o < n; ++o) value[o] = itinerary_value(orbit, o);

    std::vector<int> by_slot(n); // slot -> orbit offset
    std::iota(by_slot.begin(), by_slot.end(), 0);
    std::sort(by_slot.begin(), by_slot.end(), [&](int a, int b) { return value[a] < value[b]; });
    for (int s = 0; s + 1 < n; ++s)
        if (value[by_slot[s + 1]] - value[by_slot[s]] < 1e-15)
            throw ConstructionError("template routing degeneracy: coincident itinerary values");

    std::vector<int> slot_of(n);
    for (int s = 0; s < n; ++s) slot_of[by_slot[s]] = s;

    TemplateBraid tb;
    tb.n_strands = n;
    tb.slot_symbol.resize(n);
    tb.permutation.resize(n);
    for (int s = 0; s < n; ++s) {
        const int o = by_slot[s];
        tb.slot_symbol[s] = orbit.symbol_at(o);
        tb.permutation[s] = slot_of[(o + 1) % n];
    }

    // half-twist block on the contiguous V_m slots (rightmost branch)
    int vm_lo = n, vm_hi = -1;
    for (int s = 0; s < n; ++s) {
        if (tb.slot_symbol[s] == orbit.alphabet) {
            vm_lo = std::min(vm_lo, s);
            vm_hi = std::max(vm_hi, s);
        }
    }
    std::vector<int> letters;
    if (vm_hi > vm_lo) {
        // delta on slots [vm_lo, vm_hi]: embed the half twist of the block
        const int bn = vm_hi - vm_lo + 1;
        for (int l : PermutationBraid::half_twist(bn).word_letters())
            letters.push_back(l + vm_lo);
        // the block twist permutes the V_m slots; compose into the target
        std::vector<int> after(n);
        std::iota(after.begin(), after.end(), 0);
        for (int s = vm_lo; s <= vm_hi; ++s) after[s] = vm_hi - (s - vm_lo);
        // remaining permutation braid must route after[s] -> permutation[s]
        std::vector<int> rest(n);
        for (int s = 0; s < n; ++s) rest[after[s]] = tb.permutation[s];
        for (int l : PermutationBraid(rest).word_letters()) letters.push_back(l);
    } else {
        for (int l : PermutationBraid(tb.permutation).word_letters()) letters.push_back(l);
    }
    tb.word = BraidWord(n, letters);

    // the word's permutation must reproduce the shift permutation
    if (tb.word.permutation() != tb.permutation)
        throw ConstructionError("template braid permutation mismatch");
    return tb;
}

QBraidDemo q_braid_gamma_demo(int m, int iterations, const GammaOptions& opt) {
    QBraidDemo demo;
    demo.m = m;
    demo.braid = horseshoe_template_braid(build_Q(m));
    demo.estimate = gamma_estimate(demo.braid.word, iterations, opt);
    demo.bound = std::log(static_cast<double>(m - 2));
    demo.bound_met = demo.estimate.rate >= demo.bound - 0.1;
    return demo;
}

} // namespace braidstab
