#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "braidstab/gamma.hpp"

using namespace braidstab;

namespace {

// Independent oracle for sigma_1 sigma_2^{-1} in B_3: iterate the explicit
// substitution with its own word representation and extrapolate the length
// ratios. The images are the composition of the two defining substitutions,
//   x1 -> x1 x3 x1^{-1},  x2 -> x1,  x3 -> x3^{-1} x2 x3.
struct OracleWord {
    std::vector<int> letters;
};

OracleWord oracle_reduce(const OracleWord& w) {
    OracleWord out;
    for (int l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l) out.letters.pop_back();
        else out.letters.push_back(l);
    }
    return out;
}

std::size_t oracle_cyclic_length(OracleWord w) {
    w = oracle_reduce(w);
    std::size_t lo = 0, hi = w.letters.size();
    while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) { ++lo; --hi; }
    return hi - lo;
}

OracleWord oracle_apply(const OracleWord& w) {
    static const std::vector<std::vector<int>> img = {
        {},            // unused
        {1, 3, -1},    // x1
        {1},           // x2
        {-3, 2, 3},    // x3
    };
    OracleWord out;
    for (int l : w.letters) {
        const auto& target = img[std::abs(l)];
        if (l > 0) {
            for (int c : target) {
                if (!out.letters.empty() && out.letters.back() == -c) out.letters.pop_back();
                else out.letters.push_back(c);
            }
        } else {
            for (auto it = target.rbegin(); it != target.rend(); ++it) {
                const int c = -*it;
                if (!out.letters.empty() && out.letters.back() == -c) out.letters.pop_back();
                else out.letters.push_back(c);
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("artin action of a single generator") {
    const FreeGroupEndo e = artin_action(BraidWord(2, {1}));
    CHECK(e.images[0] == FWord({1, 2, -1}));
    CHECK(e.images[1] == FWord({1}));

    const FreeGroupEndo id = artin_action(BraidWord(3, {}));
    CHECK(id.is_identity());

    // composition with the inverse letter cancels
    const FreeGroupEndo round = artin_action(BraidWord(2, {1, -1}));
    CHECK(round.is_identity());
}

TEST_CASE("artin action respects the braid relation") {
    const FreeGroupEndo a = artin_action(BraidWord(3, {1, 2, 1}));
    const FreeGroupEndo b = artin_action(BraidWord(3, {2, 1, 2}));
    for (int i = 0; i < 3; ++i) CHECK(a.images[i] == b.images[i]);
}

TEST_CASE("derived images of sigma1 sigma2^{-1} match the oracle substitution") {
    const FreeGroupEndo e = artin_action(BraidWord(3, {1, -2}));
    CHECK(e.images[0] == FWord({1, 3, -1}));
    CHECK(e.images[1] == FWord({1}));
    CHECK(e.images[2] == FWord({-3, 2, 3}));
}

TEST_CASE("oracle: exact iteration extrapolates to log((3+sqrt5)/2)") {
    // iterate the pair probe x1 x2 and extrapolate the log-ratio sequence
    OracleWord w{{1, 2}};
    std::vector<double> logratio;
    std::size_t prev = oracle_cyclic_length(w);
    for (int n = 1; n <= 18; ++n) {
        w = oracle_apply(w);
        const std::size_t len = oracle_cyclic_length(w);
        if (prev > 0) logratio.push_back(std::log(double(len) / double(prev)));
        prev = len;
    }
    REQUIRE(logratio.size() >= 6);
    // Aitken acceleration on the tail
    const std::size_t m = logratio.size();
    const double a0 = logratio[m - 3], a1 = logratio[m - 2], a2 = logratio[m - 1];
    const double denom = a2 - 2 * a1 + a0;
    const double aitken = (std::abs(denom) > 1e-15) ? a2 - (a2 - a1) * (a2 - a1) / denom : a2;
    const double target = std::log((3.0 + std::sqrt(5.0)) / 2.0);
    CHECK(target == doctest::Approx(0.9624236501).epsilon(1e-9));
    CHECK(aitken == doctest::Approx(target).epsilon(1e-3));
}

TEST_CASE("gamma estimate of sigma1 sigma2^{-1} at N = 18") {
    const GrowthEstimate est = gamma_estimate(BraidWord(3, {1, -2}), 18);
    CHECK(est.rate >= 0.952);
    CHECK(est.rate <= 0.973);
    CHECK(!est.saturated);
}

TEST_CASE("finite-order braid has near-zero rate") {
    const GrowthEstimate est = gamma_estimate(BraidWord(3, {1, 2}), 18);
    CHECK(est.rate <= 0.05);
    CHECK(est.rate >= 0.0);
}

TEST_CASE("k-scaling of the growth rate") {
    const BraidWord w(3, {1, -2});
    const double base = gamma_estimate(w, 18).rate;
    const double sq = gamma_estimate(w.power(2), 9).rate;
    const double cu = gamma_estimate(w.power(3), 6).rate;
    CHECK(std::abs(sq - 2 * base) <= 0.03);
    CHECK(std::abs(cu - 3 * base) <= 0.05);
}

TEST_CASE("conjugacy invariance of the estimate") {
    struct Rng {
        std::uint64_t s;
        std::uint64_t next() { s ^= s << 13; s ^= s >> 7; s ^= s << 17; return s; }
        int pick(int b) { return static_cast<int>(next() % b); }
    } rng{123456789};
    const BraidWord w(3, {1, -2});
    const double base = gamma_estimate(w, 14).rate;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> ls;
        const int len = 1 + rng.pick(4);
        for (int i = 0; i < len; ++i) {
            const int g = 1 + rng.pick(2);
            ls.push_back(rng.pick(2) ? g : -g);
        }
        const BraidWord u(3, ls);
        const BraidWord c = u.inverse().concat(w).concat(u);
        const double rate = gamma_estimate(c, 14).rate;
        CHECK(std::abs(rate - base) <= 0.02);
    }
}

TEST_CASE("the fitted rate stabilizes in N") {
    const BraidWord w(3, {1, -2});
    const double r16 = gamma_estimate(w, 16).rate;
    const double r17 = gamma_estimate(w, 17).rate;
    const double r18 = gamma_estimate(w, 18).rate;
    CHECK(std::abs(r17 - r16) < 1e-3);
    CHECK(std::abs(r18 - r17) < 1e-3);
}

TEST_CASE("rates are never negative") {
    for (const auto& letters : std::vector<std::vector<int>>{{1}, {-1}, {1, 2}, {-1, -2}, {}}) {
        const GrowthEstimate est = gamma_estimate(BraidWord(3, letters), 10);
        CHECK(est.rate >= 0.0);
    }
}

TEST_CASE("memory cap sets the saturation flag") {
    GammaOptions opt;
    opt.memory_cap = 64;
    const GrowthEstimate est = gamma_estimate(BraidWord(3, {1, -2}), 18, opt);
    CHECK(est.saturated);
    // the partial estimate is still reported
    CHECK(est.rate >= 0.0);
}
