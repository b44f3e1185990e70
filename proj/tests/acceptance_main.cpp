// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Numeric criteria run in-process; CLI-level criteria drive
// the installed binary through scenario files.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidstab/braid_geometry.hpp"
#include "braidstab/gamma.hpp"
#include "braidstab/garside.hpp"
#include "braidstab/gf2.hpp"
#include "braidstab/horseshoe_template.hpp"
#include "braidstab/orbits.hpp"
#include "braidstab/presets.hpp"
#include "braidstab/report.hpp"
#include "braidstab/symbolic.hpp"

using namespace braidstab;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int id, bool pass, const std::string& what, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const { return seconds_since(t0); }
};

std::string fmt(double v) { return format_float(v); }

// analytic crossing enumeration for rigidly rotating points (independent of
// the sampling-based extractor)
BraidWord rotation_oracle(const std::vector<double>& angles, double rotation, double theta) {
    struct Ev { double t; int a, b; };
    std::vector<Ev> events;
    const int n = static_cast<int>(angles.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double chord = 0.5 * (angles[a] + angles[b]) + M_PI / 2;
            for (int m = -16; m <= 16; ++m) {
                const double t = (theta + M_PI / 2 - chord + m * M_PI) / rotation;
                if (t > 1e-12 && t < 1.0 - 1e-12) events.push_back({t, a, b});
            }
        }
    std::sort(events.begin(), events.end(), [](const Ev& x, const Ev& y) {
        if (x.t != y.t) return x.t < y.t;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::cos(angles[a] - theta) < std::cos(angles[b] - theta);
    });
    std::vector<int> slot(n);
    for (int s = 0; s < n; ++s) slot[order[s]] = s;
    std::vector<int> letters;
    const int sign = rotation > 0 ? +1 : -1;
    for (const auto& ev : events) {
        const int sa = slot[ev.a], sb = slot[ev.b];
        letters.push_back(sign * (std::min(sa, sb) + 1));
        std::swap(slot[ev.a], slot[ev.b]);
    }
    return BraidWord(std::max(2, n), letters);
}

int run_cli(const std::string& cli, const std::string& command, const std::string& scenario,
            const std::string& out_dir, std::uint64_t seed = 1) {
    const std::string cmd = cli + " " + command + " --scenario " + scenario + " --out " +
                            out_dir + " --seed " + std::to_string(seed) +
                            " --threads 4 > " + out_dir + ".log 2>&1";
    fs::create_directories(out_dir);
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli, scenarios;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--scenarios") scenarios = argv[i + 1];
    }
    const fs::path work = fs::temp_directory_path() / "braidstab_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    // 1. Gamma estimator accuracy at N = 18
    {
        Timer t;
        const GrowthEstimate est = gamma_estimate(BraidWord(3, {1, -2}), 18);
        const double dt = t.elapsed();
        criterion(1, est.rate >= 0.952 && est.rate <= 0.973 && dt < 5.0,
                  "gamma(s1 s2^-1, N=18) in [0.952, 0.973], < 5 s",
                  "rate " + fmt(est.rate) + ", " + fmt(dt) + " s");
    }

    // 2. k-scaling
    {
        Timer t;
        const BraidWord w(3, {1, -2});
        const double base = gamma_estimate(w, 18).rate;
        const double sq = gamma_estimate(w.power(2), 9).rate;
        const double cu = gamma_estimate(w.power(3), 6).rate;
        const double dt = t.elapsed();
        criterion(2,
                  std::abs(sq - 2 * base) <= 0.03 && std::abs(cu - 3 * base) <= 0.05 && dt < 30.0,
                  "gamma k-scaling for w^2, w^3, < 30 s",
                  "|" + fmt(sq) + " - 2x| = " + fmt(std::abs(sq - 2 * base)) + ", |" + fmt(cu) +
                      " - 3x| = " + fmt(std::abs(cu - 3 * base)) + ", " + fmt(dt) + " s");
    }

    // 3. conjugacy invariance over 50 random conjugators
    {
        const BraidWord w(3, {1, -2});
        const double base = gamma_estimate(w, 18).rate;
        std::uint64_t s = 0x9e3779b97f4a7c15ULL;
        auto next = [&s]() { s ^= s << 13; s ^= s >> 7; s ^= s << 17; return s; };
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> ls;
            const int len = 1 + static_cast<int>(next() % 4);
            for (int i = 0; i < len; ++i) {
                const int g = 1 + static_cast<int>(next() % 2);
                ls.push_back((next() & 1) ? g : -g);
            }
            const BraidWord u(3, ls);
            const double rate = gamma_estimate(u.inverse().concat(w).concat(u), 18).rate;
            worst = std::max(worst, std::abs(rate - base));
        }
        criterion(3, worst <= 0.02, "gamma conjugacy invariance over 50 conjugators",
                  "worst deviation " + fmt(worst));
    }

    // 4. finite-order braid
    {
        const GrowthEstimate est = gamma_estimate(BraidWord(3, {1, 2}), 18);
        criterion(4, est.rate <= 0.05, "gamma(s1 s2, N=18) <= 0.05", "rate " + fmt(est.rate));
    }

    // 5. braid extraction oracle + projection sweep
    {
        bool ok = true;
        std::string note;
        // 2 points / half turn
        {
            const std::vector<double> angles = {0.3, 0.3 + M_PI};
            const BraidWord w =
                braid_word_from_geometric(rigid_rotation_braid(angles, 1.0, M_PI), 0.02);
            ok = ok && w.length() == 1 &&
                 words_equal(w, rotation_oracle(angles, M_PI, 0.02));
        }
        // 3 points / third turn
        {
            const std::vector<double> angles = {0.1, 0.1 + 2 * M_PI / 3, 0.1 + 4 * M_PI / 3};
            const GeometricBraid braid = rigid_rotation_braid(angles, 0.7, 2 * M_PI / 3);
            const BraidWord w = braid_word_from_geometric(braid, 0.05);
            ok = ok && w.length() == 2 && words_equal(w, rotation_oracle(angles, 2 * M_PI / 3, 0.05));
            ok = ok && are_conjugate(w, BraidWord(3, {1, 2})).answer == ConjugacyAnswer::Yes;
        }
        // full twists up to n = 5, plus the 16-angle sweep
        for (int n = 2; n <= 5 && ok; ++n) {
            std::vector<double> angles;
            for (int i = 0; i < n; ++i) angles.push_back(0.2 + 2 * M_PI * i / n);
            const GeometricBraid braid = rigid_rotation_braid(angles, 0.8, 2 * M_PI, 1024);
            ExtractOptions eo;
            const BraidWord w0 = braid_word_robust(braid, eo);
            std::vector<int> gen;
            for (int i = 1; i < n; ++i) gen.push_back(i);
            const BraidWord delta2 = BraidWord(n, gen).power(n);
            ok = ok && static_cast<int>(w0.length()) == n * (n - 1) && words_equal(w0, delta2);
            ok = ok && words_equal(w0, rotation_oracle(angles, 2 * M_PI, eo.projection_angle));
            for (int j = 0; j < 16 && ok; ++j) {
                ExtractOptions sweep;
                sweep.projection_angle = 0.03 + j * (M_PI / 16.5);
                const BraidWord wj = braid_word_robust(braid, sweep);
                ok = ok && are_conjugate(w0, wj, 8000).answer == ConjugacyAnswer::Yes;
                if (!ok) note = "sweep angle " + fmt(sweep.projection_angle) + " at n=" + std::to_string(n);
            }
        }
        criterion(5, ok, "rigid-rotation braid extraction matches the analytic oracle", note);
    }

    // 6. symplectic integrity on all presets
    {
        bool ok = true;
        std::string note;
        for (const char* name :
             {"rotation", "shear", "pendulum", "forced-pendulum", "bump-perturbed",
              "resonant-rotation"}) {
            auto H = make_preset(name);
            const SurfacePoint p(0.31, 0.17);
            auto [q, M] = flow_map_with_jacobian(H, p, 0.0, 1.0, 1e-3);
            const double det_err = std::abs(M.det() - 1.0);
            const SurfacePoint back = flow_map(H, q, 1.0, 0.0, 1e-3);
            const double round = (back.lift - p.lift).norm();
            if (det_err > 1e-6 || round > 1e-8) {
                ok = false;
                note = std::string(name) + ": det err " + fmt(det_err) + ", roundtrip " + fmt(round);
            }
        }
        criterion(6, ok, "time-1 Jacobian det within 1e-6, roundtrip within 1e-8", note);
    }

    // 7. orbit solver on the rotation and the pendulum
    {
        bool ok = true;
        std::string note;
        auto R = make_preset("rotation", {{"c", 1.0}});
        SeedGrid grid;
        grid.nx = grid.ny = 32;
        grid.radius = 0.85;
        for (int k = 1; k <= 3 && ok; ++k) {
            const OrbitSet set = find_periodic_points(R, k, grid);
            if (set.size() != 1 || set.orbits[0].seed.lift.norm() > 1e-8) {
                ok = false;
                note = "rotation k=" + std::to_string(k) + " found " + std::to_string(set.size());
            }
        }
        if (ok) {
            auto P = make_preset("pendulum");
            SeedGrid tg;
            tg.nx = tg.ny = 32;
            const OrbitSet set = find_periodic_points(P, 1, tg);
            ok = set.size() == 2;
            if (ok) {
                const auto& saddle = set.orbits[0];
                const auto& centre = set.orbits[1];
                ok = ok && saddle.type == OrbitType::Hyperbolic &&
                     centre.type == OrbitType::Elliptic;
                const double big = std::max(saddle.multipliers.re1, saddle.multipliers.re2);
                ok = ok && std::abs(big - std::exp(1.0)) < 1e-4;
                ok = ok && std::abs(centre.multipliers.re1 - std::cos(1.0)) < 1e-4 &&
                     std::abs(std::abs(centre.multipliers.im1) - std::sin(1.0)) < 1e-4;
                if (!ok) note = "pendulum multipliers off";
            } else {
                note = "pendulum found " + std::to_string(set.size()) + " orbits";
            }
        }
        criterion(7, ok, "orbit solver: rotation origin (k=1..3), pendulum equilibria", note);
    }

    // 8. action values
    {
        const double c = 1.3;
        auto H = make_preset("rotation", {{"c", c}});
        const PeriodicOrbit orb = promote_root(H, SurfacePoint(0.0, 0.0), 1, {});
        const double err_const = std::abs(*orb.action - (-c / 2));

        auto Q = make_preset("quadratic", {{"c", 2 * M_PI}});
        const double r = 0.5;
        PeriodicOrbit circle;
        circle.seed = SurfacePoint(r, 0.0);
        circle.period_k = 1;
        circle.samples = integrate_flow(Q, circle.seed, 0.0, 1.0, 1e-3);
        const double err_circle = std::abs(orbit_action(Q, circle) - 2 * M_PI * r * r);
        criterion(8, err_const < 1e-10 && err_circle < 1e-5,
                  "constant-orbit action -c/2 and circle action 2 pi r^2",
                  "errors " + fmt(err_const) + ", " + fmt(err_circle));
    }

    // 9. stability experiment through the CLI
    {
        Timer t;
        bool ok = !cli.empty() && !scenarios.empty();
        std::string note = ok ? "" : "missing --cli/--scenarios";
        if (ok) {
            const std::string out = (work / "stability").string();
            const int code = run_cli(cli, "stability", scenarios + "/stability_period3.json", out);
            ok = code == 0;
            if (!ok) note = "exit code " + std::to_string(code);
            if (ok) {
                const auto doc = nlohmann::json::parse(read_text_file(out + "/stability.json"));
                const double gap = std::stod(doc.at("min_positive_gap").get<std::string>());
                int checked = 0;
                for (const auto& rep : doc.at("reports")) {
                    const double hofer = std::stod(rep.at("hofer_bound").get<std::string>());
                    const double drift = std::stod(rep.at("max_drift").get<std::string>());
                    if (hofer <= 0.5 * gap / 100.0 + 1e-12) {
                        ++checked;
                        if (rep.at("conjugacy").get<std::string>() != "yes") {
                            ok = false;
                            note = "verdict not yes at hofer " + fmt(hofer);
                        }
                        if (drift > hofer + 1e-4) {
                            ok = false;
                            note = "drift " + fmt(drift) + " above bound at hofer " + fmt(hofer);
                        }
                    }
                    if (rep.at("falsified").get<bool>()) { ok = false; note = "falsification row"; }
                }
                ok = ok && checked == 10;
                if (checked != 10) note = "only " + std::to_string(checked) + " amplitudes in range";
            }
            const double dt = t.elapsed();
            ok = ok && dt < 600.0;
            criterion(9, ok, "stability sweep: verdict yes, drift bounded, exit 0, < 10 min",
                      note + (note.empty() ? "" : ", ") + fmt(dt) + " s");
        } else {
            criterion(9, false, "stability sweep", note);
        }
    }

    // 10. GF(2) corpus
    {
        Timer t;
        const GF2CorpusResult res = run_gf2_corpus(1000, 20240811, 6, 7);
        const double dt = t.elapsed();
        criterion(10,
                  res.total == 1000 && res.constructed_ok == 1000 && res.failures == 0 &&
                      res.oracle_confirmed == 1000 && dt < 60.0,
                  "1000 random pairings verified and oracle-confirmed, < 1 min",
                  std::to_string(res.constructed_ok) + "/1000, " + fmt(dt) + " s");
    }

    // 11. horseshoe symbolics: Q structure and the template braid bound
    {
        Timer t;
        bool ok = true;
        std::string note;
        for (int m = 3; m <= 12 && ok; ++m) {
            const QStructureReport rep = verify_Q_structure(m);
            ok = rep.all_pass && rep.period == 8 * (m - 2);
            if (!ok) note = "structure failed at m=" + std::to_string(m);
        }
        if (ok) {
            const QBraidDemo d4 = q_braid_gamma_demo(4, 10);
            const QBraidDemo d5 = q_braid_gamma_demo(5, 9);
            ok = d4.estimate.rate >= std::log(2.0) - 0.1 && d5.estimate.rate >= std::log(3.0) - 0.1;
            note = "gamma(m=4) " + fmt(d4.estimate.rate) + " vs " + fmt(std::log(2.0)) +
                   ", gamma(m=5) " + fmt(d5.estimate.rate) + " vs " + fmt(std::log(3.0));
        }
        const double dt = t.elapsed();
        ok = ok && dt < 300.0;
        criterion(11, ok, "Q structure m=3..12 and template braid bound, < 5 min",
                  note + ", " + fmt(dt) + " s");
    }

    // 12. determinism of CLI artifacts
    {
        bool ok = !cli.empty() && !scenarios.empty();
        std::string note = ok ? "" : "missing --cli/--scenarios";
        if (ok) {
            struct Case { const char* cmd; const char* scenario; std::vector<const char*> files; };
            const std::vector<Case> cases = {
                {"orbits", "orbits_rotation.json", {"orbits.csv", "orbits.json", "trajectories.csv"}},
                {"entropy", "entropy_basic.json", {"entropy.csv", "entropy.json"}},
                {"gf2-corpus", "gf2_corpus.json", {"gf2.csv", "gf2.json"}},
                {"stability", "stability_origin.json", {"stability.csv", "stability.json"}},
            };
            for (const auto& c : cases) {
                const std::string out1 = (work / (std::string(c.cmd) + "_1")).string();
                const std::string out2 = (work / (std::string(c.cmd) + "_2")).string();
                if (run_cli(cli, c.cmd, scenarios + "/" + c.scenario, out1, 11) != 0 ||
                    run_cli(cli, c.cmd, scenarios + "/" + c.scenario, out2, 11) != 0) {
                    ok = false;
                    note = std::string(c.cmd) + " failed to run";
                    break;
                }
                for (const char* f : c.files) {
                    if (read_text_file(out1 + "/" + f) != read_text_file(out2 + "/" + f)) {
                        ok = false;
                        note = std::string(c.cmd) + "/" + f + " differs between reruns";
                    }
                }
            }
        }
        criterion(12, ok, "identical scenario reruns produce identical artifact bytes", note);
    }

    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
