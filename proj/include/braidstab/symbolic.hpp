#ifndef BRAIDSTAB_SYMBOLIC_HPP
#define BRAIDSTAB_SYMBOLIC_HPP

#include <string>
#include <vector>

namespace braidstab {

// Periodic point of the full shift on {1..m}: one period of the bi-infinite
// word, with position 0 marked at index 0.
struct SymbolWord {
    int alphabet = 0;          // m
    std::vector<int> period;   // symbols, values in 1..m

    int period_length() const { return static_cast<int>(period.size()); }
    // theta_k with periodic wraparound (k may be negative)
    int symbol_at(long k) const;
    std::string str() const;
};

// The periodic word prod_{j=2}^{m-1} (m j 1 j 1 j m j), period 8(m-2).
// Requires m >= 3.
SymbolWord build_Q(int m);

// Reduce a word to its primitive root length (the true period).
int primitive_period(const std::vector<int>& word);

// Cylinder memberships of the coding: a point x lies in
//   V_j         iff theta_0(x) = j
//   H_j         iff theta_{-1}(x) = j   (H_j is the forward image of V_j)
//   image of H_j iff theta_{-2}(x) = j
bool in_V(const SymbolWord& w, long pos, int j);
bool in_H(const SymbolWord& w, long pos, int j);
bool in_image_H(const SymbolWord& w, long pos, int j);

struct QCheckRow {
    int j = 0;
    std::string condition;
    bool pass = false;
};

struct QStructureReport {
    int m = 0;
    int period = 0;
    int expected_period = 0;
    bool period_ok = false;
    std::vector<QCheckRow> rows;
    bool all_pass = false;
};

// Checks, for every j in 2..m-1, the four odd-index memberships
//   q_1^j in V_1, H_j, image(H_m);  q_3^j in V_1, H_j, image(H_1);
//   q_5^j in V_m, H_j, image(H_1);  q_7^j in V_m, H_j, image(H_m);
// the even-index memberships q_2,q_4,q_6,q_8 in H_1 u H_m; and the period.
// The block for j starts at offset 8(j-2); q_l^j sits at offset
// 8(j-2) + l + 1 (so q_1^j marks the first "1" of its block).
QStructureReport verify_Q_structure(int m);
QStructureReport verify_Q_structure(const SymbolWord& w);

// Topological entropy of the full shift on m symbols (context value).
double full_shift_entropy(int m);

} // namespace braidstab

#endif
