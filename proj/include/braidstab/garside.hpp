#ifndef BRAIDSTAB_GARSIDE_HPP
#define BRAIDSTAB_GARSIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidstab/braid_word.hpp"

namespace braidstab {

// Simple (positive, square-free) braid factor, identified with a permutation:
// perm[i] = final position of the strand entering at position i.
struct PermutationBraid {
    std::vector<int> perm;

    explicit PermutationBraid(int n);
    explicit PermutationBraid(std::vector<int> p) : perm(std::move(p)) {}

    int n() const { return static_cast<int>(perm.size()); }
    bool is_identity() const;
    bool is_half_twist() const;
    int inversions() const;

    static PermutationBraid identity(int n);
    static PermutationBraid generator(int n, int i); // sigma_i, 1-based
    static PermutationBraid half_twist(int n);       // Delta

    PermutationBraid then(const PermutationBraid& o) const; // this, then o
    PermutationBraid inverse_perm() const;
    PermutationBraid tau() const; // Delta^{-1} . Delta conjugation (flip)

    // starting set: {i : sigma_i is a prefix}; finishing set: suffix version
    std::vector<bool> starting_set() const;
    std::vector<bool> finishing_set() const;

    // positive reduced word realizing the factor
    std::vector<int> word_letters() const;

    bool operator==(const PermutationBraid& o) const { return perm == o.perm; }
    bool operator<(const PermutationBraid& o) const { return perm < o.perm; }
};

// Left-greedy Garside normal form Delta^e A_1 ... A_m, factors neither
// identity nor Delta, consecutive pairs left-weighted.
struct NormalForm {
    int n_strands = 2;
    int delta_power = 0;
    std::vector<PermutationBraid> factors;

    int inf() const { return delta_power; }
    int sup() const { return delta_power + static_cast<int>(factors.size()); }
    int canonical_length() const { return static_cast<int>(factors.size()); }

    bool operator==(const NormalForm& o) const;
    std::string str() const; // Delta^k . factors in one-line notation
    BraidWord to_word() const;
};

NormalForm normal_form(const BraidWord& w);
bool words_equal(const BraidWord& a, const BraidWord& b);

enum class ConjugacyAnswer { Yes, No, Unknown };

struct ConjugacyResult {
    ConjugacyAnswer answer = ConjugacyAnswer::Unknown;
    std::optional<BraidWord> witness;  // g with g^{-1} a g = b, verified
    std::string invariant;             // populated on No
    long nodes_explored = 0;
};

// Conjugacy decision: invariant refusals (exponent sum, permutation cycle
// type, summit inf/sup), then cycling/decycling to a summit representative
// and a bounded breadth-first search of the summit set by simple-element
// conjugations. Budget exhaustion yields Unknown, never a guess.
ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b, long budget = 4000);

} // namespace braidstab

#endif
