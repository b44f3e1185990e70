#ifndef BRAIDSTAB_HORSESHOE_TEMPLATE_HPP
#define BRAIDSTAB_HORSESHOE_TEMPLATE_HPP

#include "braidstab/braid_word.hpp"
#include "braidstab/gamma.hpp"
#include "braidstab/symbolic.hpp"

namespace braidstab {

// Disk braid word realizing a periodic symbolic orbit on a linear
// m-branch template with all branches positively oriented. Points are
// assigned horizontal slots by the m-adic value of their forward itinerary
// (so the V_1 block sits leftmost and the V_m block rightmost) and one
// template return contributes the positive permutation braid of the shift,
// preceded by a positive half-twist block on the strands of the V_m branch
// (the winding of the orientation-preserving return of the last branch).
struct TemplateBraid {
    int n_strands = 0;
    std::vector<int> slot_symbol;  // theta_0 of the point in each slot
    std::vector<int> permutation;  // slot -> slot under the shift
    BraidWord word;
};

TemplateBraid horseshoe_template_braid(const SymbolWord& orbit);

struct QBraidDemo {
    int m = 0;
    TemplateBraid braid;
    GrowthEstimate estimate;
    double bound = 0.0; // log(m-2)
    bool bound_met = false;
};

// Builds the template braid of the orbit Q(m) and estimates its entropy
// lower bound; checks estimate >= log(m-2) - 0.1. Strand count 8(m-2)
// grows fast, so m <= 6 is the supported range.
QBraidDemo q_braid_gamma_demo(int m, int iterations, const GammaOptions& opt = {});

} // namespace braidstab

#endif
