#include "braidstab/gf2.hpp"

#include <algorithm>
#include <sstream>

#include "braidstab/errors.hpp"

namespace braidstab {

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw DimensionError("GF2Matrix: dimensions must be positive");
    words_per_row_ = (cols + 63) / 64;
    bits_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

GF2Matrix GF2Matrix::identity(int n) {
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool GF2Matrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

void GF2Matrix::set(int r, int c, bool v) {
    auto& word = bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (v) word |= mask; else word &= ~mask;
}

void GF2Matrix::xor_row_into(int src, int dst) {
    for (int w = 0; w < words_per_row_; ++w)
        bits_[static_cast<std::size_t>(dst) * words_per_row_ + w] ^=
            bits_[static_cast<std::size_t>(src) * words_per_row_ + w];
}

void GF2Matrix::swap_rows(int a, int b) {
    for (int w = 0; w < words_per_row_; ++w)
        std::swap(bits_[static_cast<std::size_t>(a) * words_per_row_ + w],
                  bits_[static_cast<std::size_t>(b) * words_per_row_ + w]);
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("GF2Matrix multiply: dimension mismatch");
    GF2Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k))
                for (int w = 0; w < o.words_per_row_; ++w)
                    out.bits_[static_cast<std::size_t>(i) * out.words_per_row_ + w] ^=
                        o.bits_[static_cast<std::size_t>(k) * o.words_per_row_ + w];
    return out;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

int GF2Matrix::rank() const {
    GF2Matrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.get(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        m.swap_rows(pivot, rank);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
        ++rank;
    }
    return rank;
}

std::optional<GF2Matrix> GF2Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    GF2Matrix m = *this;
    GF2Matrix inv = identity(rows_);
    int rank = 0;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.get(r, col)) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        m.swap_rows(pivot, rank);
        inv.swap_rows(pivot, rank);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && m.get(r, col)) { m.xor_row_into(rank, r); inv.xor_row_into(rank, r); }
        ++rank;
    }
    return inv;
}

std::vector<bool> GF2Matrix::column(int c) const {
    std::vector<bool> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = get(r, c);
    return out;
}

std::vector<bool> GF2Matrix::row_bits(int r) const {
    std::vector<bool> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = get(r, c);
    return out;
}

std::string GF2Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

GF2Matrix GF2Matrix::parse(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw DimensionError("GF2Matrix::parse: empty input");
    GF2Matrix m(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(lines[r].size()) != m.cols())
            throw DimensionError("GF2Matrix::parse: ragged rows");
        for (int c = 0; c < m.cols(); ++c) {
            if (lines[r][c] == '1') m.set(r, c, true);
            else if (lines[r][c] != '0') throw DimensionError("GF2Matrix::parse: bad character");
        }
    }
    return m;
}

bool GF2Matrix::operator==(const GF2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::vector<bool> gf2_apply(const GF2Matrix& m, const std::vector<bool>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw DimensionError("gf2_apply: size mismatch");
    std::vector<bool> out(m.rows(), false);
    for (int r = 0; r < m.rows(); ++r) {
        bool acc = false;
        for (int c = 0; c < m.cols(); ++c) acc = acc != (m.get(r, c) && v[c]);
        out[r] = acc;
    }
    return out;
}

int gf2_rank_of_vectors(const std::vector<std::vector<bool>>& vecs) {
    if (vecs.empty()) return 0;
    GF2Matrix m(static_cast<int>(vecs.size()), static_cast<int>(vecs[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, vecs[r][c]);
    return m.rank();
}

namespace {

bool in_span(const std::vector<std::vector<bool>>& basis, const std::vector<bool>& v) {
    const int r0 = gf2_rank_of_vectors(basis);
    auto extended = basis;
    extended.push_back(v);
    return gf2_rank_of_vectors(extended) == r0;
}

std::vector<bool> unit_vector(int dim, int i) {
    std::vector<bool> e(dim, false);
    e[i] = true;
    return e;
}

// the induction of the selection lemma; indices are 0-based coordinates
void select_recursive(std::vector<std::vector<bool>> w, std::vector<std::vector<bool>> z,
                      std::vector<int>& iota) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return;
    const int dim = static_cast<int>(w[0].size());
    const std::vector<bool>& wn = w.back();

    // Q = span(w_1..w_{n-1}) + Z
    std::vector<std::vector<bool>> q(w.begin(), w.end() - 1);
    q.insert(q.end(), z.begin(), z.end());

    int chosen = -1;
    for (int i = 0; i < dim; ++i) {
        if (!wn[i]) continue;
        if (!in_span(q, unit_vector(dim, i))) { chosen = i; break; } // smallest index
    }
    if (chosen < 0) throw TransversalityError("selection: w_n lies in span(w_1..w_{n-1}) + Z");

    iota[n - 1] = chosen;
    // project the rest by zeroing the chosen coordinate and recurse
    w.pop_back();
    for (auto& v : w) v[chosen] = false;
    for (auto& v : z) v[chosen] = false;
    select_recursive(std::move(w), std::move(z), iota);
}

} // namespace

std::vector<int> transverse_selection(const std::vector<std::vector<bool>>& w,
                                      const std::vector<std::vector<bool>>& z_basis) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw DimensionError("transverse_selection: no vectors");
    const int dim = static_cast<int>(w[0].size());
    const int k = static_cast<int>(z_basis.size());

    if (gf2_rank_of_vectors(w) != n)
        throw TransversalityError("transverse_selection: w vectors dependent");
    if (k > 0 && gf2_rank_of_vectors(z_basis) != k)
        throw TransversalityError("transverse_selection: Z basis dependent");
    {
        auto all = w;
        all.insert(all.end(), z_basis.begin(), z_basis.end());
        if (gf2_rank_of_vectors(all) != n + k)
            throw TransversalityError("transverse_selection: span(w) meets Z");
    }

    std::vector<int> iota(n, -1);
    select_recursive(w, z_basis, iota);

    // re-verify the two lemma conditions
    for (int j = 0; j < n; ++j)
        if (!w[j][iota[j]]) throw TransversalityError("selection postcondition failed (appearance)");
    std::vector<std::vector<bool>> l;
    for (int j = 0; j < n; ++j) l.push_back(unit_vector(dim, iota[j]));
    auto all = l;
    all.insert(all.end(), z_basis.begin(), z_basis.end());
    if (gf2_rank_of_vectors(all) != n + k)
        throw TransversalityError("selection postcondition failed (transversality)");
    return iota;
}

namespace {

std::vector<std::vector<bool>> kernel_basis(const GF2Matrix& g) {
    // null space of g (rows x cols): reduce and read free columns
    const int rows = g.rows(), cols = g.cols();
    GF2Matrix m = g;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m.get(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        m.swap_rows(pivot, rank);
        for (int r = 0; r < rows; ++r)
            if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<bool>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<bool> v(cols, false);
        v[free] = true;
        for (int r = 0; r < rank; ++r)
            if (m.get(r, free)) v[pivot_col[r]] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

Pairing pairing_from_maps(const GF2Matrix& F, const GF2Matrix& G) {
    const int n = F.cols();
    const int m = F.rows();
    if (G.rows() != n || G.cols() != m)
        throw DimensionError("pairing_from_maps: G must be n x m for F m x n");
    const GF2Matrix gf = G.multiply(F);
    if (!gf.invertible()) throw TransversalityError("pairing_from_maps: G o F is not invertible");

    // first selection in R: w_i = F(v_i), Z = ker(G)
    std::vector<std::vector<bool>> w;
    for (int i = 0; i < n; ++i) w.push_back(F.column(i));
    const auto kerg = kernel_basis(G);
    Pairing p;
    p.f = transverse_selection(w, kerg);

    // second selection in V: w_i = G(r_{f(i)}), Z = {0}
    std::vector<std::vector<bool>> w2;
    for (int i = 0; i < n; ++i) w2.push_back(G.column(p.f[i]));
    p.g = transverse_selection(w2, {});

    if (!verify_pairing(F, G, p))
        throw TransversalityError("pairing_from_maps: constructed pairing failed verification");
    return p;
}

bool verify_pairing(const GF2Matrix& F, const GF2Matrix& G, const Pairing& p) {
    const int n = F.cols();
    const int m = F.rows();
    if (G.rows() != n || G.cols() != m) return false;
    if (static_cast<int>(p.f.size()) != n || static_cast<int>(p.g.size()) != n) return false;
    std::vector<bool> used_f(m, false), used_g(n, false);
    for (int i = 0; i < n; ++i) {
        const int fi = p.f[i], gi = p.g[i];
        if (fi < 0 || fi >= m || used_f[fi]) return false;
        used_f[fi] = true;
        if (gi < 0 || gi >= n || used_g[gi]) return false;
        used_g[gi] = true;
        if (!F.get(fi, i)) return false;  // r_{f(i)} appears in F(v_i)
        if (!G.get(gi, fi)) return false; // v_{g(i)} appears in G(r_{f(i)})
    }
    return true;
}

namespace {

bool match_g(const GF2Matrix& G, const std::vector<int>& f, std::vector<int>& g,
             std::vector<bool>& used, int i) {
    const int n = G.rows();
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || !G.get(cand, f[i])) continue;
        used[cand] = true;
        g[i] = cand;
        if (match_g(G, f, g, used, i + 1)) return true;
        used[cand] = false;
    }
    return false;
}

bool search_f(const GF2Matrix& F, const GF2Matrix& G, std::vector<int>& f,
              std::vector<bool>& used, int i) {
    const int n = F.cols(), m = F.rows();
    if (i == n) {
        std::vector<int> g(n, -1);
        std::vector<bool> gu(n, false);
        return match_g(G, f, g, gu, 0);
    }
    for (int cand = 0; cand < m; ++cand) {
        if (used[cand] || !F.get(cand, i)) continue;
        used[cand] = true;
        f[i] = cand;
        if (search_f(F, G, f, used, i + 1)) return true;
        used[cand] = false;
    }
    return false;
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

} // namespace

bool pairing_exists_bruteforce(const GF2Matrix& F, const GF2Matrix& G) {
    std::vector<int> f(F.cols(), -1);
    std::vector<bool> used(F.rows(), false);
    return search_f(F, G, f, used, 0);
}

GF2CorpusResult run_gf2_corpus(int instances, std::uint64_t seed, int max_dim,
                               int oracle_dim_limit) {
    SplitMix64 rng(seed);
    GF2CorpusResult res;
    while (res.total < instances) {
        const int n = 1 + rng.below(max_dim);
        const int m = n + rng.below(max_dim - n + 1);
        GF2Matrix F(m, n), G(n, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) F.set(r, c, rng.next() & 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < m; ++c) G.set(r, c, rng.next() & 1);
        if (!G.multiply(F).invertible()) continue;
        ++res.total;
        try {
            const Pairing p = pairing_from_maps(F, G);
            if (verify_pairing(F, G, p)) ++res.constructed_ok;
            else ++res.failures;
        } catch (const std::exception&) {
            ++res.failures;
        }
        if (m <= oracle_dim_limit) {
            if (pairing_exists_bruteforce(F, G)) ++res.oracle_confirmed;
            else ++res.failures;
        }
    }
    return res;
}

} // namespace braidstab
