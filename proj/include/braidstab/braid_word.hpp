#ifndef BRAIDSTAB_BRAID_WORD_HPP
#define BRAIDSTAB_BRAID_WORD_HPP

#include <string>
#include <vector>

namespace braidstab {

// Word in the Artin generators of B_n: letters are signed indices (+i, -i),
// 1 <= i <= n-1. Positive letter = counterclockwise interchange of the
// strands at positions i, i+1. Words act left-to-right on positions.
struct BraidWord {
    int n_strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    std::size_t length() const { return letters.size(); }
    int exponent_sum() const;

    BraidWord inverse() const;
    BraidWord concat(const BraidWord& o) const;
    BraidWord power(int k) const;

    // Underlying permutation: perm[i] = final position of the strand that
    // starts at position i.
    std::vector<int> permutation() const;

    // whitespace-separated signed generator indices, e.g. "1 -2 1"
    std::string str() const;
    static BraidWord parse(const std::string& text, int n_strands);

    bool operator==(const BraidWord& o) const {
        return n_strands == o.n_strands && letters == o.letters;
    }
};

// Free reduction: cancel adjacent s_i s_i^{-1} pairs.
BraidWord free_reduce(const BraidWord& w);

// Free reduction plus cancellation across the cyclic wrap.
BraidWord cyclic_reduce(const BraidWord& w);

// Cycle-type fingerprint of the permutation (sorted cycle lengths); a
// conjugacy invariant of the underlying permutation.
std::vector<int> permutation_cycle_type(const std::vector<int>& perm);

} // namespace braidstab

#endif
