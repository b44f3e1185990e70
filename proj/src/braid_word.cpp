#include "braidstab/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidstab {

BraidWord::BraidWord(int n, std::vector<int> ls) : n_strands(n), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("braid word needs at least 1 strand");
    for (int l : letters) {
        const int idx = std::abs(l);
        if (l == 0 || idx > n - 1)
            throw std::invalid_argument("generator index out of range: " + std::to_string(l));
    }
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int l : letters) s += (l > 0) ? 1 : -1;
    return s;
}

BraidWord BraidWord::inverse() const {
    BraidWord out;
    out.n_strands = n_strands;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

BraidWord BraidWord::concat(const BraidWord& o) const {
    if (o.n_strands != n_strands) throw std::invalid_argument("strand count mismatch");
    BraidWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
}

BraidWord BraidWord::power(int k) const {
    BraidWord base = (k >= 0) ? *this : inverse();
    BraidWord out;
    out.n_strands = n_strands;
    for (int i = 0; i < std::abs(k); ++i) out = out.concat(base);
    return out;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> pos(n_strands);
    std::iota(pos.begin(), pos.end(), 0); // pos of strand s
    // track positions: letter i swaps the strands at positions i-1, i (0-based)
    std::vector<int> at(n_strands);
    std::iota(at.begin(), at.end(), 0); // strand at position p
    for (int l : letters) {
        const int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(n_strands);
    for (int p = 0; p < n_strands; ++p) perm[at[p]] = p;
    return perm;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << letters[i];
    }
    return os.str();
}

BraidWord BraidWord::parse(const std::string& text, int n_strands) {
    std::istringstream is(text);
    std::vector<int> ls;
    int v;
    while (is >> v) ls.push_back(v);
    return BraidWord(n_strands, std::move(ls));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int l : w.letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(w.n_strands, std::move(out));
}

BraidWord cyclic_reduce(const BraidWord& w) {
    BraidWord r = free_reduce(w);
    while (r.letters.size() >= 2 && r.letters.front() == -r.letters.back()) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
        r = free_reduce(r);
    }
    return r;
}

std::vector<int> permutation_cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

} // namespace braidstab
