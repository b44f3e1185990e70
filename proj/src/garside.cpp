#include "braidstab/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "braidstab/errors.hpp"

namespace braidstab {

PermutationBraid::PermutationBraid(int n) : perm(n) {
    std::iota(perm.begin(), perm.end(), 0);
}

bool PermutationBraid::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (perm[i] != i) return false;
    return true;
}

bool PermutationBraid::is_half_twist() const {
    for (int i = 0; i < n(); ++i)
        if (perm[i] != n() - 1 - i) return false;
    return true;
}

int PermutationBraid::inversions() const {
    int count = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

PermutationBraid PermutationBraid::identity(int n) { return PermutationBraid(n); }

PermutationBraid PermutationBraid::generator(int n, int i) {
    PermutationBraid p(n);
    std::swap(p.perm[i - 1], p.perm[i]);
    return p;
}

PermutationBraid PermutationBraid::half_twist(int n) {
    PermutationBraid p(n);
    for (int i = 0; i < n; ++i) p.perm[i] = n - 1 - i;
    return p;
}

PermutationBraid PermutationBraid::then(const PermutationBraid& o) const {
    PermutationBraid out(n());
    for (int i = 0; i < n(); ++i) out.perm[i] = o.perm[perm[i]];
    return out;
}

PermutationBraid PermutationBraid::inverse_perm() const {
    PermutationBraid out(n());
    for (int i = 0; i < n(); ++i) out.perm[perm[i]] = i;
    return out;
}

PermutationBraid PermutationBraid::tau() const {
    // tau(A)[i] = n-1 - A[n-1-i]; conjugation by the half twist
    PermutationBraid out(n());
    for (int i = 0; i < n(); ++i) out.perm[i] = n() - 1 - perm[n() - 1 - i];
    return out;
}

std::vector<bool> PermutationBraid::starting_set() const {
    std::vector<bool> s(n(), false); // index i means sigma_{i+1}... use 0-based slot
    for (int i = 0; i + 1 < n(); ++i) s[i] = perm[i] > perm[i + 1];
    return s;
}

std::vector<bool> PermutationBraid::finishing_set() const {
    const PermutationBraid inv = inverse_perm();
    std::vector<bool> f(n(), false);
    for (int i = 0; i + 1 < n(); ++i) f[i] = inv.perm[i] > inv.perm[i + 1];
    return f;
}

std::vector<int> PermutationBraid::word_letters() const {
    // bubble-sort the arrangement to identity, then reverse the swap list
    std::vector<int> arr(n());
    for (int i = 0; i < n(); ++i) arr[perm[i]] = i; // strand at final position
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n(); ++i) {
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                swaps.push_back(i + 1); // 1-based generator index
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

bool NormalForm::operator==(const NormalForm& o) const {
    return n_strands == o.n_strands && delta_power == o.delta_power && factors == o.factors;
}

std::string NormalForm::str() const {
    std::ostringstream os;
    os << "D^" << delta_power;
    for (const auto& f : factors) {
        os << " . [";
        for (int i = 0; i < f.n(); ++i) {
            if (i) os << ' ';
            os << f.perm[i] + 1;
        }
        os << "]";
    }
    return os.str();
}

BraidWord NormalForm::to_word() const {
    BraidWord w(n_strands, {});
    const PermutationBraid delta = PermutationBraid::half_twist(n_strands);
    BraidWord dw(n_strands, delta.word_letters());
    if (delta_power >= 0) {
        for (int i = 0; i < delta_power; ++i) w = w.concat(dw);
    } else {
        const BraidWord dwi = dw.inverse();
        for (int i = 0; i < -delta_power; ++i) w = w.concat(dwi);
    }
    for (const auto& f : factors) w = w.concat(BraidWord(n_strands, f.word_letters()));
    return w;
}

namespace {

// Left-weighted condition for the pair (A, B): S(B) contained in F(A).
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
    const auto s = b.starting_set();
    const auto f = a.finishing_set();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] && !f[i]) return false;
    return true;
}

// Slide sigma_{i+1} (0-based slot i) from the head of B to the tail of A.
void pass_generator(PermutationBraid& a, PermutationBraid& b, int slot) {
    // A := A . sigma ; value swap of slot, slot+1 in A's image
    for (int j = 0; j < a.n(); ++j) {
        if (a.perm[j] == slot) a.perm[j] = slot + 1;
        else if (a.perm[j] == slot + 1) a.perm[j] = slot;
    }
    // B := sigma^{-1} . B ; position swap at the entry
    std::swap(b.perm[slot], b.perm[slot + 1]);
}

void normalize_factors(int n, int& e, std::vector<PermutationBraid>& fs) {
    bool changed = true;
    while (changed) {
        changed = false;
        // drop identities
        for (std::size_t j = 0; j < fs.size();) {
            if (fs[j].is_identity()) { fs.erase(fs.begin() + j); changed = true; }
            else ++j;
        }
        // extract half twists to the left, twisting earlier factors
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (fs[j].is_half_twist()) {
                for (std::size_t i = 0; i < j; ++i) fs[i] = fs[i].tau();
                fs.erase(fs.begin() + j);
                e += 1;
                changed = true;
                break;
            }
        }
        // left-weighting passes
        for (std::size_t j = 0; j + 1 < fs.size(); ++j) {
            bool pair_moved = false;
            while (!left_weighted(fs[j], fs[j + 1])) {
                const auto s = fs[j + 1].starting_set();
                const auto f = fs[j].finishing_set();
                for (int i = 0; i + 1 < n; ++i) {
                    if (s[i] && !f[i]) { pass_generator(fs[j], fs[j + 1], i); break; }
                }
                pair_moved = true;
            }
            if (pair_moved) { changed = true; }
        }
    }
}

} // namespace

NormalForm normal_form(const BraidWord& w) {
    const int n = w.n_strands;
    NormalForm nf;
    nf.n_strands = n;
    if (n == 1) return nf;
    int e = 0;
    std::vector<PermutationBraid> fs;
    for (int l : w.letters) {
        const int i = std::abs(l);
        if (l > 0) {
            fs.push_back(PermutationBraid::generator(n, i));
        } else {
            // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); push the Delta^{-1}
            // to the front through the existing factors
            for (auto& f : fs) f = f.tau();
            e -= 1;
            // Delta sigma_i^{-1}: right multiplication swaps the values i-1, i,
            // which sit at positions n-i, n-1-i of the half twist
            PermutationBraid ds = PermutationBraid::half_twist(n);
            std::swap(ds.perm[n - 1 - i], ds.perm[n - i]);
            fs.push_back(ds);
        }
    }
    normalize_factors(n, e, fs);
    nf.delta_power = e;
    nf.factors = std::move(fs);
    return nf;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
    if (a.n_strands != b.n_strands) throw DimensionError("words_equal: strand count mismatch");
    return normal_form(a) == normal_form(b);
}

namespace {

struct NfKey {
    int e;
    std::vector<std::vector<int>> ps;
    bool operator<(const NfKey& o) const {
        if (e != o.e) return e < o.e;
        return ps < o.ps;
    }
    bool operator==(const NfKey& o) const { return e == o.e && ps == o.ps; }
};

NfKey key_of(const NormalForm& nf) {
    NfKey k;
    k.e = nf.delta_power;
    for (const auto& f : nf.factors) k.ps.push_back(f.perm);
    return k;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
    return g.inverse().concat(w).concat(g);
}

// cycling: NF Delta^p x1..xl -> Delta^p x2..xl tau^p(x1), realized as a
// conjugation by tau^{-p}(x1)
std::optional<BraidWord> cycling_conjugator(const NormalForm& nf) {
    if (nf.factors.empty()) return std::nullopt;
    PermutationBraid x1 = nf.factors.front();
    if (nf.delta_power % 2 != 0) x1 = x1.tau();
    return BraidWord(nf.n_strands, x1.word_letters());
}

std::optional<BraidWord> decycling_conjugator(const NormalForm& nf) {
    if (nf.factors.empty()) return std::nullopt;
    return BraidWord(nf.n_strands, nf.factors.back().word_letters()).inverse();
}

// all non-trivial simple elements of B_n (n small)
std::vector<PermutationBraid> all_simples(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<PermutationBraid> out;
    while (std::next_permutation(p.begin(), p.end()))
        out.push_back(PermutationBraid(p));
    return out;
}

struct SummitState {
    BraidWord rep;       // summit representative
    BraidWord conj;      // g with g^{-1} w g = rep
    NormalForm nf;
    bool stable = false; // cycling/decycling converged under the stopping rule
};

SummitState to_summit(const BraidWord& w, long& budget) {
    SummitState st{w, BraidWord(w.n_strands, {}), normal_form(w), false};
    const int patience = std::max(8, 3 * st.nf.canonical_length() * w.n_strands);
    int since_improved = 0;
    // raise inf by cycling
    while (since_improved < patience && budget > 0) {
        auto c = cycling_conjugator(st.nf);
        if (!c) break; // power of Delta, nothing to cycle
        BraidWord cand = conjugate(st.rep, *c);
        NormalForm cnf = normal_form(cand);
        --budget;
        if (cnf.inf() > st.nf.inf()) {
            since_improved = 0;
        } else {
            ++since_improved;
        }
        st.conj = st.conj.concat(*c);
        st.rep = cand;
        st.nf = cnf;
    }
    const bool inf_stable = since_improved >= patience || st.nf.factors.empty();
    // lower sup by decycling
    since_improved = 0;
    while (since_improved < patience && budget > 0) {
        auto c = decycling_conjugator(st.nf);
        if (!c) break;
        BraidWord cand = conjugate(st.rep, *c);
        NormalForm cnf = normal_form(cand);
        --budget;
        if (cnf.sup() < st.nf.sup()) {
            since_improved = 0;
        } else {
            ++since_improved;
        }
        st.conj = st.conj.concat(*c);
        st.rep = cand;
        st.nf = cnf;
    }
    st.stable = inf_stable && (since_improved >= patience || st.nf.factors.empty());
    return st;
}

} // namespace

ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b, long budget) {
    if (a.n_strands != b.n_strands) throw DimensionError("are_conjugate: strand count mismatch");
    ConjugacyResult res;

    if (a.exponent_sum() != b.exponent_sum()) {
        res.answer = ConjugacyAnswer::No;
        res.invariant = "exponent sum " + std::to_string(a.exponent_sum()) + " vs " +
                        std::to_string(b.exponent_sum());
        return res;
    }
    if (permutation_cycle_type(a.permutation()) != permutation_cycle_type(b.permutation())) {
        res.answer = ConjugacyAnswer::No;
        res.invariant = "permutation conjugacy class";
        return res;
    }

    const NormalForm nfa = normal_form(a);
    const NormalForm nfb = normal_form(b);
    if (nfa == nfb) {
        res.answer = ConjugacyAnswer::Yes;
        res.witness = BraidWord(a.n_strands, {});
        return res;
    }

    SummitState sa = to_summit(a, budget);
    SummitState sb = to_summit(b, budget);
    if (sa.nf.inf() != sb.nf.inf() || sa.nf.sup() != sb.nf.sup()) {
        if (sa.stable && sb.stable) {
            res.answer = ConjugacyAnswer::No;
            res.invariant = "summit (inf,sup) = (" + std::to_string(sa.nf.inf()) + "," +
                            std::to_string(sa.nf.sup()) + ") vs (" + std::to_string(sb.nf.inf()) +
                            "," + std::to_string(sb.nf.sup()) + ")";
        } else {
            res.answer = ConjugacyAnswer::Unknown;
        }
        return res;
    }

    // breadth-first search of the summit level set by simple conjugations
    const NfKey target = key_of(sb.nf);
    std::map<NfKey, BraidWord> seen;
    std::deque<std::pair<NormalForm, BraidWord>> queue;
    seen.emplace(key_of(sa.nf), BraidWord(a.n_strands, {}));
    queue.emplace_back(sa.nf, BraidWord(a.n_strands, {}));
    const std::vector<PermutationBraid> simples = all_simples(a.n_strands);

    while (!queue.empty() && budget > 0) {
        auto [nf, path] = queue.front();
        queue.pop_front();
        if (key_of(nf) == target) {
            // witness: a --sa.conj--> summit --path--> sb-rep <--sb.conj-- b
            BraidWord g = sa.conj.concat(path).concat(sb.conj.inverse());
            if (words_equal(conjugate(a, g), b)) {
                res.answer = ConjugacyAnswer::Yes;
                res.witness = free_reduce(g);
                return res;
            }
        }
        const BraidWord rep = nf.to_word();
        for (const auto& s : simples) {
            if (budget-- <= 0) break;
            ++res.nodes_explored;
            BraidWord su(a.n_strands, s.word_letters());
            NormalForm cand = normal_form(conjugate(rep, su));
            if (cand.inf() != sa.nf.inf() || cand.sup() != sa.nf.sup()) continue;
            NfKey k = key_of(cand);
            if (seen.count(k)) continue;
            BraidWord npath = path.concat(su);
            seen.emplace(k, npath);
            queue.emplace_back(cand, npath);
        }
    }

    if (seen.count(target)) {
        BraidWord g = sa.conj.concat(seen[target]).concat(sb.conj.inverse());
        if (words_equal(conjugate(a, g), b)) {
            res.answer = ConjugacyAnswer::Yes;
            res.witness = free_reduce(g);
            return res;
        }
    }
    if (budget <= 0 || !sa.stable || !sb.stable) {
        res.answer = ConjugacyAnswer::Unknown;
        return res;
    }
    // search closed without reaching the target: distinct summit sets
    res.answer = ConjugacyAnswer::No;
    res.invariant = "summit set separation (closed orbit search)";
    return res;
}

} // namespace braidstab
