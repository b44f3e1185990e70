#include "braidstab/symbolic.hpp"

#include <cmath>
#include <sstream>

#include "braidstab/errors.hpp"

namespace braidstab {

int SymbolWord::symbol_at(long k) const {
    const long p = period_length();
    long r = k % p;
    if (r < 0) r += p;
    return period[static_cast<std::size_t>(r)];
}

std::string SymbolWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) os << ' ';
        os << period[i];
    }
    return os.str();
}

SymbolWord build_Q(int m) {
    if (m < 3) throw NumericDomainError("build_Q: m must be >= 3 (empty block range otherwise)");
    SymbolWord w;
    w.alphabet = m;
    w.period.reserve(8 * (m - 2));
    for (int j = 2; j <= m - 1; ++j) {
        const int block[8] = {m, j, 1, j, 1, j, m, j};
        w.period.insert(w.period.end(), block, block + 8);
    }
    return w;
}

int primitive_period(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = p; i < n && ok; ++i)
            if (word[i] != word[i - p]) ok = false;
        if (ok) return p;
    }
    return n;
}

bool in_V(const SymbolWord& w, long pos, int j) { return w.symbol_at(pos) == j; }
bool in_H(const SymbolWord& w, long pos, int j) { return w.symbol_at(pos - 1) == j; }
bool in_image_H(const SymbolWord& w, long pos, int j) { return w.symbol_at(pos - 2) == j; }

QStructureReport verify_Q_structure(int m) { return verify_Q_structure(build_Q(m)); }

QStructureReport verify_Q_structure(const SymbolWord& w) {
    QStructureReport rep;
    rep.m = w.alphabet;
    const int m = w.alphabet;
    rep.expected_period = 8 * (m - 2);
    rep.period = primitive_period(w.period);
    rep.period_ok = rep.period == rep.expected_period &&
                    static_cast<int>(w.period.size()) == rep.expected_period;

    auto q_offset = [](int j, int l) { return 8L * (j - 2) + l + 1; };
    auto add = [&rep](int j, const std::string& cond, bool pass) {
        rep.rows.push_back({j, cond, pass});
    };

    for (int j = 2; j <= m - 1; ++j) {
        add(j, "q1 in V1&Hj&im(Hm)",
            in_V(w, q_offset(j, 1), 1) && in_H(w, q_offset(j, 1), j) &&
                in_image_H(w, q_offset(j, 1), m));
        add(j, "q3 in V1&Hj&im(H1)",
            in_V(w, q_offset(j, 3), 1) && in_H(w, q_offset(j, 3), j) &&
                in_image_H(w, q_offset(j, 3), 1));
        add(j, "q5 in Vm&Hj&im(H1)",
            in_V(w, q_offset(j, 5), m) && in_H(w, q_offset(j, 5), j) &&
                in_image_H(w, q_offset(j, 5), 1));
        add(j, "q7 in Vm&Hj&im(Hm)",
            in_V(w, q_offset(j, 7), m) && in_H(w, q_offset(j, 7), j) &&
                in_image_H(w, q_offset(j, 7), m));
        for (int l : {2, 4, 6, 8}) {
            const bool pass = in_H(w, q_offset(j, l), 1) || in_H(w, q_offset(j, l), m);
            add(j, "q" + std::to_string(l) + " in H1|Hm", pass);
        }
    }

    rep.all_pass = rep.period_ok;
    for (const auto& row : rep.rows) rep.all_pass = rep.all_pass && row.pass;
    return rep;
}

double full_shift_entropy(int m) { return std::log(static_cast<double>(m)); }

} // namespace braidstab
