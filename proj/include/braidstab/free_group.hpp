#ifndef BRAIDSTAB_FREE_GROUP_HPP
#define BRAIDSTAB_FREE_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidstab/braid_word.hpp"

namespace braidstab {

// Word in a free group: letters +-(1..rank), stored compactly.
using FWord = std::vector<std::int8_t>;

FWord freely_reduce(const FWord& w);
FWord cyclically_reduce(const FWord& w);
FWord inverse_word(const FWord& w);
std::string fword_str(const FWord& w);

// Endomorphism of F_rank given by reduced images of the generators.
struct FreeGroupEndo {
    int rank = 0;
    std::vector<FWord> images; // images[i] = image of x_{i+1}

    static FreeGroupEndo identity(int rank);
    bool is_identity() const;

    // image of a word, freely reduced; cap = maximum output letters
    // (0 = unlimited). Exceeding the cap throws std::length_error.
    FWord apply(const FWord& w, std::size_t cap = 0) const;

    // this, then other (composition in application order)
    FreeGroupEndo then(const FreeGroupEndo& other) const;
};

// Induced action of a braid on the fundamental group of the punctured disk:
//   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
//   sigma_i^{-1}: x_i -> x_{i+1},               x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
// letters act in word order.
FreeGroupEndo artin_action(const BraidWord& w);

} // namespace braidstab

#endif
