#ifndef BRAIDSTAB_GF2_HPP
#define BRAIDSTAB_GF2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidstab {

// Dense bit matrix over GF(2); rows bit-packed into 64-bit words.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(int rows, int cols);

    static GF2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_row_into(int src, int dst); // dst ^= src
    void swap_rows(int a, int b);

    GF2Matrix multiply(const GF2Matrix& o) const;
    GF2Matrix transpose() const;
    int rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    std::optional<GF2Matrix> inverse() const;

    // column c as a row vector matrix (1 x rows) is awkward; expose bits
    std::vector<bool> column(int c) const;
    std::vector<bool> row_bits(int r) const;

    // 0/1 text grid, one row per line
    std::string str() const;
    static GF2Matrix parse(const std::string& text);

    bool operator==(const GF2Matrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Matrix-vector product over GF(2); v indexed by column.
std::vector<bool> gf2_apply(const GF2Matrix& m, const std::vector<bool>& v);

// Rank of a list of bit-vectors.
int gf2_rank_of_vectors(const std::vector<std::vector<bool>>& vecs);

// Selects, for independent vectors w_1..w_n and a subspace Z (given by a
// basis) with span(w) transverse to Z, an injective iota with
//   - coordinate iota(j) of w_j is 1,
//   - span{e_{iota(1)},...,e_{iota(n)}} still transverse to Z.
// Ties in the inductive basis-vector choice are broken by smallest index.
// Returns 0-based coordinate indices.
std::vector<int> transverse_selection(const std::vector<std::vector<bool>>& w,
                                      const std::vector<std::vector<bool>>& z_basis);

// Output of the pairing construction: f injective, g bijective (0-based).
struct Pairing {
    std::vector<int> f;
    std::vector<int> g;
};

// For F: V -> R (m x n over the bases {v_i}, {r_j}) and G: R -> V (n x m)
// with G F invertible, produces (f, g) with coordinate f(i) of F(v_i) set
// and coordinate g(i) of G(r_{f(i)}) set; the result is re-verified before
// returning.
Pairing pairing_from_maps(const GF2Matrix& F, const GF2Matrix& G);

bool verify_pairing(const GF2Matrix& F, const GF2Matrix& G, const Pairing& p);

// Exhaustive search oracle over all injective f and bijective g (small m).
bool pairing_exists_bruteforce(const GF2Matrix& F, const GF2Matrix& G);

struct GF2CorpusResult {
    int total = 0;
    int constructed_ok = 0;
    int oracle_confirmed = 0;  // instances where brute force also found one
    int failures = 0;
};

// Randomized corpus: n,m <= max_dim instances of (F,G) with GF invertible;
// checks pairing_from_maps against verify_pairing (and the brute-force
// oracle when oracle_dim_limit allows).
GF2CorpusResult run_gf2_corpus(int instances, std::uint64_t seed, int max_dim = 6,
                               int oracle_dim_limit = 7);

} // namespace braidstab

#endif
