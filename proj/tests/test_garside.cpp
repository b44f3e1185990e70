#include <doctest.h>

#include <cstdint>
#include <deque>
#include <set>

#include "braidstab/garside.hpp"

using namespace braidstab;

namespace {

// Brute-force equality oracle: breadth-first closure of rewriting moves
// (free insertion/cancellation, braid relation, far commutation) up to a
// length bound. Independent of the Garside machinery.
bool bruteforce_equal(const BraidWord& a, const BraidWord& b, std::size_t max_len = 8) {
    const int n = a.n_strands;
    const std::vector<int> target = free_reduce(b).letters;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    seen.insert(free_reduce(a).letters);
    queue.push_back(free_reduce(a).letters);
    std::size_t explored = 0;
    while (!queue.empty() && explored < 2000000) {
        const std::vector<int> w = queue.front();
        queue.pop_front();
        ++explored;
        if (w == target) return true;
        auto push = [&](std::vector<int> v) {
            v = free_reduce(BraidWord(n, std::move(v))).letters;
            if (v.size() > max_len) return;
            if (seen.insert(v).second) queue.push_back(v);
        };
        // free insertion at every slot
        for (std::size_t i = 0; i <= w.size(); ++i) {
            for (int g = 1; g < n; ++g) {
                for (int s : {g, -g}) {
                    std::vector<int> v = w;
                    v.insert(v.begin() + i, {s, -s});
                    push(std::move(v));
                }
            }
        }
        // braid relation x y x -> y x y on equal-sign adjacent triples
        for (std::size_t i = 0; i + 2 < w.size(); ++i) {
            const int x = w[i], y = w[i + 1], z = w[i + 2];
            if (x == z && std::abs(std::abs(x) - std::abs(y)) == 1 &&
                (x > 0) == (y > 0)) {
                std::vector<int> v = w;
                v[i] = y; v[i + 1] = x; v[i + 2] = y;
                push(std::move(v));
            }
        }
        // far commutation
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (std::abs(std::abs(w[i]) - std::abs(w[i + 1])) >= 2) {
                std::vector<int> v = w;
                std::swap(v[i], v[i + 1]);
                push(std::move(v));
            }
        }
    }
    return false;
}

BraidWord delta_word(int n) {
    return BraidWord(n, PermutationBraid::half_twist(n).word_letters());
}

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    int pick(int bound) { return static_cast<int>(next() % bound); }
};

BraidWord random_word(Rng& rng, int n, int len) {
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) {
        const int g = 1 + rng.pick(n - 1);
        ls.push_back(rng.pick(2) ? g : -g);
    }
    return BraidWord(n, std::move(ls));
}

} // namespace

TEST_CASE("permutation braid word letters rebuild the permutation") {
    for (int n : {2, 3, 4, 5}) {
        const PermutationBraid d = PermutationBraid::half_twist(n);
        const BraidWord w(n, d.word_letters());
        CHECK(static_cast<int>(w.length()) == n * (n - 1) / 2);
        // rebuild by composing generators
        PermutationBraid acc = PermutationBraid::identity(n);
        for (int l : w.letters) acc = acc.then(PermutationBraid::generator(n, l));
        CHECK(acc == d);
    }
}

TEST_CASE("tau flips generator indices") {
    const int n = 4;
    for (int i = 1; i < n; ++i) {
        const PermutationBraid t = PermutationBraid::generator(n, i).tau();
        CHECK(t == PermutationBraid::generator(n, n - i));
    }
}

TEST_CASE("braid relation and non-equality") {
    CHECK(words_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
    CHECK(!words_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
    CHECK(words_equal(BraidWord(3, {}), BraidWord(3, {1, -1})));
}

TEST_CASE("normal form of the inverse generator") {
    const NormalForm nf = normal_form(BraidWord(3, {-1}));
    CHECK(nf.delta_power == -1);
    REQUIRE(nf.factors.size() == 1);
    CHECK(!nf.factors[0].is_identity());
    CHECK(!nf.factors[0].is_half_twist());
    // Delta^{-1} (Delta sigma_1^{-1}) multiplies back to sigma_1^{-1}
    CHECK(words_equal(nf.to_word(), BraidWord(3, {-1})));
}

TEST_CASE("full twist is central") {
    const BraidWord d2 = delta_word(3).power(2);
    CHECK(words_equal(d2.concat(BraidWord(3, {1})), BraidWord(3, {1}).concat(d2)));
    CHECK(words_equal(d2.concat(BraidWord(3, {2})), BraidWord(3, {2}).concat(d2)));
}

TEST_CASE("normal form invariants on random words") {
    Rng rng{20240601};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + rng.pick(3);
        const BraidWord w = random_word(rng, n, 1 + rng.pick(10));
        const NormalForm nf = normal_form(w);
        for (std::size_t i = 0; i < nf.factors.size(); ++i) {
            CHECK(!nf.factors[i].is_identity());
            CHECK(!nf.factors[i].is_half_twist());
        }
        // round trip through the word
        CHECK(words_equal(nf.to_word(), w));
        // left-weighted pairs: S(B) subset of F(A)
        for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
            const auto s = nf.factors[i + 1].starting_set();
            const auto f = nf.factors[i].finishing_set();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (s[j]) CHECK(f[j]);
        }
    }
}

TEST_CASE("normal-form equality agrees with the brute-force oracle") {
    Rng rng{777};
    int agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3;
        const BraidWord a = random_word(rng, n, 1 + rng.pick(5));
        const BraidWord b = random_word(rng, n, 1 + rng.pick(5));
        const bool garside = words_equal(a, b);
        const bool brute = bruteforce_equal(a, b);
        CHECK(garside == brute);
        agreements += (garside == brute);
    }
    CHECK(agreements == 60);
}

TEST_CASE("words_equal is an equivalence on rewrite variants") {
    Rng rng{4242};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + rng.pick(3);
        BraidWord w = random_word(rng, n, 2 + rng.pick(8));
        // same word with a canceling pair spliced in
        std::vector<int> v = w.letters;
        const int g = 1 + rng.pick(n - 1);
        const std::size_t pos = rng.pick(static_cast<int>(v.size()) + 1);
        v.insert(v.begin() + pos, {g, -g});
        CHECK(words_equal(w, BraidWord(n, v)));
        CHECK(words_equal(w, w));
    }
}

TEST_CASE("conjugacy: explicit witness for sigma1 sigma2 vs sigma2 sigma1") {
    const ConjugacyResult res = are_conjugate(BraidWord(3, {1, 2}), BraidWord(3, {2, 1}));
    REQUIRE(res.answer == ConjugacyAnswer::Yes);
    REQUIRE(res.witness.has_value());
    const BraidWord& g = *res.witness;
    const BraidWord conjugated = g.inverse().concat(BraidWord(3, {1, 2})).concat(g);
    CHECK(words_equal(conjugated, BraidWord(3, {2, 1})));
}

TEST_CASE("conjugacy refusals by invariants") {
    const ConjugacyResult es = are_conjugate(BraidWord(3, {1, 2}), BraidWord(3, {1, -2}));
    CHECK(es.answer == ConjugacyAnswer::No);
    CHECK(es.invariant.find("exponent") != std::string::npos);

    const ConjugacyResult pc = are_conjugate(BraidWord(3, {1, -2}), BraidWord(3, {1, 1, -1, -2}));
    CHECK(pc.answer != ConjugacyAnswer::Unknown); // same word after reduction, actually equal
}

TEST_CASE("budget exhaustion yields unknown") {
    // same exponent sum and cycle type, so the fast refusals cannot decide
    const BraidWord a = BraidWord(4, {1, -2, 3, -2}).power(3);
    const BraidWord u(4, {3, 1, 2, -1, 3});
    const BraidWord b = u.inverse().concat(a).concat(u);
    const ConjugacyResult res = are_conjugate(a, b, 2);
    CHECK(res.answer == ConjugacyAnswer::Unknown);
}

TEST_CASE("conjugation preserves exponent sum and cycle type") {
    Rng rng{99};
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + rng.pick(3);
        const BraidWord w = random_word(rng, n, 1 + rng.pick(8));
        const BraidWord u = random_word(rng, n, 1 + rng.pick(4));
        const BraidWord c = u.inverse().concat(w).concat(u);
        CHECK(c.exponent_sum() == w.exponent_sum());
        CHECK(permutation_cycle_type(c.permutation()) ==
              permutation_cycle_type(w.permutation()));
    }
}

TEST_CASE("conjugacy of random conjugate pairs is confirmed") {
    Rng rng{31337};
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3;
        const BraidWord w = random_word(rng, n, 1 + rng.pick(4));
        const BraidWord u = random_word(rng, n, 1 + rng.pick(3));
        const BraidWord c = u.inverse().concat(w).concat(u);
        const ConjugacyResult res = are_conjugate(w, c, 20000);
        REQUIRE(res.answer == ConjugacyAnswer::Yes);
        const BraidWord& g = *res.witness;
        CHECK(words_equal(g.inverse().concat(w).concat(g), c));
    }
}
