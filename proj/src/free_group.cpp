#include "braidstab/free_group.hpp"

#include <sstream>
#include <stdexcept>

namespace braidstab {

FWord freely_reduce(const FWord& w) {
    FWord out;
    out.reserve(w.size());
    for (std::int8_t l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FWord cyclically_reduce(const FWord& w) {
    FWord r = freely_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) { ++lo; --hi; }
    return FWord(r.begin() + lo, r.begin() + hi);
}

FWord inverse_word(const FWord& w) {
    FWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(static_cast<std::int8_t>(-*it));
    return out;
}

std::string fword_str(const FWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int v = w[i];
        os << (v > 0 ? "x" : "X") << std::abs(v);
    }
    return os.str();
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
    FreeGroupEndo e;
    e.rank = rank;
    e.images.resize(rank);
    for (int i = 0; i < rank; ++i) e.images[i] = {static_cast<std::int8_t>(i + 1)};
    return e;
}

bool FreeGroupEndo::is_identity() const {
    for (int i = 0; i < rank; ++i) {
        if (images[i].size() != 1 || images[i][0] != i + 1) return false;
    }
    return true;
}

FWord FreeGroupEndo::apply(const FWord& w, std::size_t cap) const {
    FWord out;
    out.reserve(w.size() * 2);
    for (std::int8_t l : w) {
        const int idx = std::abs(l) - 1;
        const FWord& img = images[idx];
        if (l > 0) {
            for (std::int8_t c : img) {
                if (!out.empty() && out.back() == -c) out.pop_back();
                else out.push_back(c);
            }
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it) {
                const std::int8_t c = static_cast<std::int8_t>(-*it);
                if (!out.empty() && out.back() == -c) out.pop_back();
                else out.push_back(c);
            }
        }
        if (cap && out.size() > cap) throw std::length_error("free group word cap exceeded");
    }
    return out;
}

FreeGroupEndo FreeGroupEndo::then(const FreeGroupEndo& other) const {
    FreeGroupEndo out;
    out.rank = rank;
    out.images.resize(rank);
    for (int i = 0; i < rank; ++i) out.images[i] = other.apply(images[i]);
    return out;
}

FreeGroupEndo artin_action(const BraidWord& w) {
    const int rank = w.n_strands;
    FreeGroupEndo total = FreeGroupEndo::identity(rank);
    for (int l : w.letters) {
        FreeGroupEndo e = FreeGroupEndo::identity(rank);
        const int i = std::abs(l); // generator index, 1-based
        if (l > 0) {
            e.images[i - 1] = {static_cast<std::int8_t>(i), static_cast<std::int8_t>(i + 1),
                               static_cast<std::int8_t>(-i)};
            e.images[i] = {static_cast<std::int8_t>(i)};
        } else {
            e.images[i - 1] = {static_cast<std::int8_t>(i + 1)};
            e.images[i] = {static_cast<std::int8_t>(-(i + 1)), static_cast<std::int8_t>(i),
                           static_cast<std::int8_t>(i + 1)};
        }
        total = total.then(e);
    }
    return total;
}

} // namespace braidstab
