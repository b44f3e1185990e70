#include "braidstab/scenario.hpp"

#include <chrono>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "braidstab/braid_geometry.hpp"
#include "braidstab/errors.hpp"
#include "braidstab/gamma.hpp"
#include "braidstab/garside.hpp"
#include "braidstab/gf2.hpp"
#include "braidstab/horseshoe_template.hpp"
#include "braidstab/orbits.hpp"
#include "braidstab/presets.hpp"
#include "braidstab/report.hpp"
#include "braidstab/stability.hpp"
#include "braidstab/symbolic.hpp"

namespace braidstab {

using json = nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ScenarioError(path + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ScenarioError(path + ": unknown key '" + it.key() + "'");
    }
}

ParamMap parse_params(const json& j, const std::string& path) {
    ParamMap out;
    if (j.is_null()) return out;
    if (!j.is_object()) throw ScenarioError(path + ": expected an object of numbers");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number()) throw ScenarioError(path + "." + it.key() + ": not a number");
        out[it.key()] = it.value().get<double>();
    }
    return out;
}

struct ScenarioDoc {
    json root;
    std::string raw;
};

ScenarioDoc load_scenario(const std::string& path) {
    ScenarioDoc doc;
    doc.raw = read_text_file(path);
    try {
        doc.root = json::parse(doc.raw);
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    require_keys(doc.root, "scenario",
                 {"seed", "hamiltonian", "orbits", "braid", "entropy", "perturbation", "gf2",
                  "symbolic"});
    return doc;
}

const json& need_section(const json& root, const std::string& name) {
    if (!root.contains(name))
        throw ScenarioError("scenario: missing required section '" + name + "'");
    return root.at(name);
}

TimePeriodicHamiltonian parse_hamiltonian(const json& root) {
    const json& h = need_section(root, "hamiltonian");
    require_keys(h, "hamiltonian", {"preset", "params"});
    if (!h.contains("preset") || !h.at("preset").is_string())
        throw ScenarioError("hamiltonian.preset: required string");
    const ParamMap params =
        h.contains("params") ? parse_params(h.at("params"), "hamiltonian.params") : ParamMap{};
    return make_preset(h.at("preset").get<std::string>(), params);
}

struct OrbitSection {
    int k = 1;
    SeedGrid grid;
    OrbitSearchOptions search;
};

OrbitSection parse_orbits(const json& root, int threads) {
    OrbitSection sec;
    sec.search.threads = threads;
    if (!root.contains("orbits")) return sec;
    const json& o = root.at("orbits");
    require_keys(o, "orbits",
                 {"k", "grid_nx", "grid_ny", "grid_radius", "grid", "seeds", "step", "tol_orbit",
                  "merge_radius", "tol_eig", "max_newton"});
    auto num = [&o](const char* key, double fallback) {
        if (!o.contains(key)) return fallback;
        if (!o.at(key).is_number()) throw ScenarioError(std::string("orbits.") + key + ": not a number");
        return o.at(key).get<double>();
    };
    sec.k = static_cast<int>(num("k", 1));
    sec.grid.nx = static_cast<int>(num("grid_nx", 32));
    sec.grid.ny = static_cast<int>(num("grid_ny", 32));
    sec.grid.radius = num("grid_radius", 0.95);
    if (o.contains("grid")) {
        if (!o.at("grid").is_boolean()) throw ScenarioError("orbits.grid: not a boolean");
        sec.grid.grid_enabled = o.at("grid").get<bool>();
    }
    if (o.contains("seeds")) {
        if (!o.at("seeds").is_array()) throw ScenarioError("orbits.seeds: expected array of [x,y]");
        for (const auto& s : o.at("seeds")) {
            if (!s.is_array() || s.size() != 2) throw ScenarioError("orbits.seeds: expected [x,y]");
            sec.grid.extra.emplace_back(s[0].get<double>(), s[1].get<double>());
        }
    }
    sec.search.step = num("step", 1e-3);
    sec.search.tol_orbit = num("tol_orbit", 1e-10);
    sec.search.merge_radius = num("merge_radius", 1e-4);
    sec.search.tol_eig = num("tol_eig", 1e-6);
    sec.search.max_newton = static_cast<int>(num("max_newton", 30));
    return sec;
}

struct BraidSection {
    SuspendOptions suspend;
    ExtractOptions extract;
    std::vector<double> sweep_angles;
};

BraidSection parse_braid(const json& root) {
    BraidSection sec;
    if (!root.contains("braid")) return sec;
    const json& b = root.at("braid");
    require_keys(b, "braid",
                 {"samples_per_period", "projection_angle", "collision_radius", "sweep_angles"});
    if (b.contains("samples_per_period"))
        sec.suspend.samples_per_period = b.at("samples_per_period").get<int>();
    if (b.contains("projection_angle"))
        sec.extract.projection_angle = b.at("projection_angle").get<double>();
    if (b.contains("collision_radius"))
        sec.suspend.collision_radius = b.at("collision_radius").get<double>();
    if (b.contains("sweep_angles")) {
        for (const auto& a : b.at("sweep_angles")) sec.sweep_angles.push_back(a.get<double>());
    }
    return sec;
}

std::string format_name(ReportFormat f) {
    switch (f) {
        case ReportFormat::Csv: return "csv";
        case ReportFormat::Json: return "json";
        default: return "both";
    }
}

struct ArtifactWriter {
    std::string dir;
    ReportFormat format;
    std::vector<std::string> written;

    void csv(const std::string& name, const CsvTable& table) {
        if (format == ReportFormat::Json) return;
        const std::string path = dir + "/" + name;
        write_text_file(path, table.str());
        written.push_back(path);
    }
    void js(const std::string& name, const json& doc) {
        if (format == ReportFormat::Csv) return;
        const std::string path = dir + "/" + name;
        write_text_file(path, doc.dump(2) + "\n");
        written.push_back(path);
    }
};

json orbit_record(const PeriodicOrbit& o) {
    json rec;
    rec["seed"] = {format_float(o.seed.lift.x), format_float(o.seed.lift.y)};
    rec["period"] = o.period_k;
    rec["multipliers"] = {
        {format_float(o.multipliers.re1), format_float(o.multipliers.im1)},
        {format_float(o.multipliers.re2), format_float(o.multipliers.im2)}};
    rec["type"] = orbit_type_name(o.type);
    rec["nondegenerate"] = o.nondegenerate;
    if (o.action) rec["action"] = format_float(*o.action);
    rec["class"] = o.homotopy_class.str();
    rec["residual"] = format_float(o.residual);
    return rec;
}

int cmd_orbits(const ScenarioDoc& doc, const RunOptions& opt, ArtifactWriter& out) {
    const TimePeriodicHamiltonian H = parse_hamiltonian(doc.root);
    const OrbitSection sec = parse_orbits(doc.root, opt.threads);
    const OrbitSet set = find_periodic_points(H, sec.k, sec.grid, sec.search);

    CsvTable table;
    table.header = {"index", "seed_x", "seed_y", "period", "type", "nondegenerate",
                    "mult1_re", "mult1_im", "mult2_re", "mult2_im", "action", "class",
                    "residual"};
    json jorbits = json::array();
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const auto& o = set.orbits[i];
        table.rows.push_back({std::to_string(i), format_float(o.seed.lift.x),
                              format_float(o.seed.lift.y), std::to_string(o.period_k),
                              orbit_type_name(o.type), o.nondegenerate ? "1" : "0",
                              format_float(o.multipliers.re1), format_float(o.multipliers.im1),
                              format_float(o.multipliers.re2), format_float(o.multipliers.im2),
                              o.action ? format_float(*o.action) : "",
                              o.homotopy_class.str(), format_float(o.residual)});
        jorbits.push_back(orbit_record(o));
    }
    out.csv("orbits.csv", table);

    CsvTable traj;
    traj.header = {"orbit", "t", "x", "y", "lift_x", "lift_y"};
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const auto& tr = set.orbits[i].samples;
        for (std::size_t j = 0; j < tr.size(); ++j) {
            const Vec2 red = tr.points[j].reduced(set.surface);
            traj.rows.push_back({std::to_string(i), format_float(tr.times[j]),
                                 format_float(red.x), format_float(red.y),
                                 format_float(tr.points[j].lift.x),
                                 format_float(tr.points[j].lift.y)});
        }
    }
    out.csv("trajectories.csv", traj);

    json jdoc;
    jdoc["surface"] = surface_name(set.surface);
    jdoc["k"] = sec.k;
    jdoc["orbits"] = jorbits;
    jdoc["degenerate_seeds"] = set.degenerate_seeds;
    jdoc["failed_seeds"] = set.failed_seeds;
    out.js("orbits.json", jdoc);
    return 0;
}

int cmd_braid(const ScenarioDoc& doc, const RunOptions& opt, ArtifactWriter& out) {
    const TimePeriodicHamiltonian H = parse_hamiltonian(doc.root);
    const OrbitSection sec = parse_orbits(doc.root, opt.threads);
    const BraidSection bs = parse_braid(doc.root);
    const OrbitSet set = find_periodic_points(H, sec.k, sec.grid, sec.search);

    // one suspension per orbit: roots on the same cycle would give
    // coincident strands
    std::vector<SurfacePoint> roots;
    for (const auto& o : set.orbits) roots.push_back(o.seed);
    auto time1 = [&](const SurfacePoint& p) {
        return flow_map(H, p, 0.0, 1.0, sec.search.step, sec.search.integrator);
    };
    OrbitSet grouped;
    grouped.surface = set.surface;
    for (const auto& g :
         group_orbit_roots(roots, H.surface(), time1, sec.search.merge_radius))
        grouped.orbits.push_back(promote_root(H, g.front(), sec.k, sec.search));
    const GeometricBraid braid = suspend_orbits(grouped, bs.suspend);
    BraidWord word(std::max(2, braid.n_strands()), {});
    if (braid.n_strands() >= 1) word = braid_word_robust(braid, bs.extract);

    CsvTable strands;
    strands.header = {"strand", "t", "x", "y"};
    for (int s = 0; s < braid.n_strands(); ++s)
        for (int i = 0; i < braid.samples_per_strand; ++i)
            strands.rows.push_back({std::to_string(s), format_float(braid.time_of(i)),
                                    format_float(braid.strands[s][i].x),
                                    format_float(braid.strands[s][i].y)});
    out.csv("strands.csv", strands);

    json jdoc;
    jdoc["n_strands"] = braid.n_strands();
    jdoc["word"] = word.str();
    jdoc["exponent_sum"] = word.exponent_sum();
    {
        json perm = json::array();
        for (int v : word.permutation()) perm.push_back(v);
        jdoc["permutation"] = perm;
    }
    if (!bs.sweep_angles.empty() && braid.n_strands() >= 2) {
        json sweep = json::array();
        bool all_conj = true;
        for (double a : bs.sweep_angles) {
            ExtractOptions eo = bs.extract;
            eo.projection_angle = a;
            const BraidWord w = braid_word_robust(braid, eo);
            const bool conj = are_conjugate(word, w).answer == ConjugacyAnswer::Yes;
            all_conj = all_conj && conj;
            sweep.push_back({{"angle", format_float(a)}, {"word", w.str()}, {"conjugate", conj}});
        }
        jdoc["sweep"] = sweep;
        jdoc["sweep_all_conjugate"] = all_conj;
    }
    out.js("braid.json", jdoc);

    CsvTable wordcsv;
    wordcsv.header = {"n_strands", "word", "exponent_sum"};
    wordcsv.rows.push_back({std::to_string(braid.n_strands()), word.str(),
                            std::to_string(word.exponent_sum())});
    out.csv("braid.csv", wordcsv);
    return 0;
}

int cmd_entropy(const ScenarioDoc& doc, const RunOptions&, ArtifactWriter& out) {
    const json& e = need_section(doc.root, "entropy");
    require_keys(e, "entropy", {"word", "n_strands", "iterations"});
    if (!e.contains("word") || !e.contains("n_strands"))
        throw ScenarioError("entropy: 'word' and 'n_strands' are required");
    const int n = e.at("n_strands").get<int>();
    const int iters = e.contains("iterations") ? e.at("iterations").get<int>() : 18;
    BraidWord w;
    try {
        w = BraidWord::parse(e.at("word").get<std::string>(), n);
    } catch (const std::exception& ex) {
        throw ScenarioError(std::string("entropy.word: ") + ex.what());
    }
    const GrowthEstimate est = gamma_estimate(w, iters);

    CsvTable table;
    table.header = {"word", "n_strands", "iterations", "probe", "final_length", "probe_rate",
                    "saturated", "rate"};
    json jprobes = json::array();
    for (const auto& p : est.probes) {
        table.rows.push_back({w.str(), std::to_string(n), std::to_string(iters), p.label,
                              std::to_string(p.lengths.back()), format_float(p.rate),
                              p.saturated ? "1" : "0", format_float(est.rate)});
        json jp;
        jp["probe"] = p.label;
        json lens = json::array();
        for (auto v : p.lengths) lens.push_back(v);
        jp["lengths"] = lens;
        jp["rate"] = format_float(p.rate);
        jp["saturated"] = p.saturated;
        jprobes.push_back(jp);
    }
    out.csv("entropy.csv", table);
    json jdoc;
    jdoc["word"] = w.str();
    jdoc["n_strands"] = n;
    jdoc["iterations"] = iters;
    jdoc["rate"] = format_float(est.rate);
    jdoc["saturated"] = est.saturated;
    jdoc["probes"] = jprobes;
    out.js("entropy.json", jdoc);
    return 0;
}

StabilityScenarioConfig parse_stability(const ScenarioDoc& doc, const RunOptions& opt) {
    StabilityScenarioConfig cfg;
    const json& h = need_section(doc.root, "hamiltonian");
    require_keys(h, "hamiltonian", {"preset", "params"});
    cfg.preset = h.at("preset").get<std::string>();
    if (h.contains("params")) cfg.preset_params = parse_params(h.at("params"), "hamiltonian.params");

    const OrbitSection osec = parse_orbits(doc.root, opt.threads);
    cfg.seeds = osec.grid;
    cfg.search = osec.search;

    const BraidSection bsec = parse_braid(doc.root);
    cfg.braid_samples = bsec.suspend.samples_per_period;
    cfg.projection_angle = bsec.extract.projection_angle;

    const json& p = need_section(doc.root, "perturbation");
    require_keys(p, "perturbation",
                 {"params", "amplitudes", "target_type", "target_action", "promote_k", "epsilon",
                  "require_nonzero_action", "conjugacy_budget", "gamma_iterations",
                  "hofer_t_grid", "hofer_space_grid"});
    if (p.contains("params"))
        cfg.perturbation_params = parse_params(p.at("params"), "perturbation.params");
    if (!p.contains("amplitudes") || !p.at("amplitudes").is_array())
        throw ScenarioError("perturbation.amplitudes: required array");
    for (const auto& a : p.at("amplitudes")) cfg.amplitudes.push_back(a.get<double>());
    if (p.contains("target_type")) cfg.target_type = p.at("target_type").get<std::string>();
    if (p.contains("target_action")) cfg.target_action = p.at("target_action").get<double>();
    if (p.contains("promote_k")) cfg.promote_k = p.at("promote_k").get<int>();
    if (p.contains("epsilon")) cfg.epsilon = p.at("epsilon").get<double>();
    if (p.contains("require_nonzero_action"))
        cfg.require_nonzero_action = p.at("require_nonzero_action").get<bool>();
    if (p.contains("conjugacy_budget")) cfg.conjugacy_budget = p.at("conjugacy_budget").get<long>();
    if (p.contains("gamma_iterations")) cfg.gamma_iterations = p.at("gamma_iterations").get<int>();
    if (p.contains("hofer_t_grid")) cfg.hofer_t_grid = p.at("hofer_t_grid").get<int>();
    if (p.contains("hofer_space_grid")) cfg.hofer_space_grid = p.at("hofer_space_grid").get<int>();
    return cfg;
}

int cmd_stability(const ScenarioDoc& doc, const RunOptions& opt, ArtifactWriter& out) {
    const StabilityScenarioConfig cfg = parse_stability(doc, opt);
    const StabilityRun run = run_stability_experiment(cfg);

    CsvTable table;
    table.header = {"amplitude", "hofer_bound", "epsilon", "min_gap", "hypothesis_met",
                    "note", "matched", "max_drift", "word_plus", "word_minus", "conjugacy",
                    "gamma_plus", "gamma_minus", "falsified"};
    json jreports = json::array();
    for (const auto& r : run.reports) {
        table.rows.push_back({format_float(r.amplitude), format_float(r.hofer_bound),
                              format_float(r.epsilon), format_float(r.min_positive_gap),
                              r.hypothesis_met ? "1" : "0", r.hypothesis_note,
                              std::to_string(r.matches.size()), format_float(r.max_drift),
                              r.word_plus, r.word_minus, r.conjugacy,
                              format_float(r.gamma_plus), format_float(r.gamma_minus),
                              r.falsified ? "1" : "0"});
        json jr;
        jr["amplitude"] = format_float(r.amplitude);
        jr["hofer_bound"] = format_float(r.hofer_bound);
        jr["epsilon"] = format_float(r.epsilon);
        jr["hypothesis_met"] = r.hypothesis_met;
        jr["hypothesis_note"] = r.hypothesis_note;
        json jm = json::array();
        for (const auto& m : r.matches) {
            jm.push_back({{"seed_plus", {format_float(m.seed_plus.lift.x), format_float(m.seed_plus.lift.y)}},
                          {"seed_minus", {format_float(m.seed_minus.lift.x), format_float(m.seed_minus.lift.y)}},
                          {"action_plus", format_float(m.action_plus)},
                          {"action_minus", format_float(m.action_minus)},
                          {"drift", format_float(m.drift)},
                          {"window", m.window_matched},
                          {"continuation", m.continuation_matched}});
        }
        jr["matches"] = jm;
        jr["word_plus"] = r.word_plus;
        jr["word_minus"] = r.word_minus;
        jr["conjugacy"] = r.conjugacy;
        jr["witness"] = r.witness;
        jr["gamma_plus"] = format_float(r.gamma_plus);
        jr["gamma_minus"] = format_float(r.gamma_minus);
        jr["max_drift"] = format_float(r.max_drift);
        jr["falsified"] = r.falsified;
        jreports.push_back(jr);
    }
    out.csv("stability.csv", table);

    json jdoc;
    jdoc["epsilon"] = format_float(run.epsilon);
    jdoc["min_positive_gap"] = format_float(run.min_positive_gap);
    jdoc["isolation_ok"] = run.isolation_ok;
    jdoc["isolation_scope"] = "relative to the discovered orbit set; completeness not certified";
    jdoc["surface"] = surface_name(run.orbits_plus_all.surface);
    if (run.orbits_plus_all.surface == Surface::Torus)
        jdoc["braid_check"] =
            "words from cover projections plus winding and permutation data; weaker than a "
            "surface-braid word calculus";
    json jorb = json::array();
    for (const auto& o : run.orbits_plus_all.orbits) jorb.push_back(orbit_record(o));
    jdoc["orbits_plus"] = jorb;
    json jt = json::array();
    for (auto i : run.target_idx) jt.push_back(static_cast<int>(i));
    jdoc["target_indices"] = jt;
    jdoc["reports"] = jreports;
    jdoc["any_falsified"] = run.any_falsified;
    out.js("stability.json", jdoc);
    return run.any_falsified ? 1 : 0;
}

int cmd_gf2(const ScenarioDoc& doc, const RunOptions& opt, ArtifactWriter& out) {
    int instances = 1000, max_dim = 6, oracle_limit = 7;
    if (doc.root.contains("gf2")) {
        const json& g = doc.root.at("gf2");
        require_keys(g, "gf2", {"instances", "max_dim", "oracle_dim_limit"});
        if (g.contains("instances")) instances = g.at("instances").get<int>();
        if (g.contains("max_dim")) max_dim = g.at("max_dim").get<int>();
        if (g.contains("oracle_dim_limit")) oracle_limit = g.at("oracle_dim_limit").get<int>();
    }
    const GF2CorpusResult res = run_gf2_corpus(instances, opt.seed, max_dim, oracle_limit);
    std::printf("gf2-corpus: %d instances, %d constructed ok, %d oracle confirmed, %d failures\n",
                res.total, res.constructed_ok, res.oracle_confirmed, res.failures);

    CsvTable table;
    table.header = {"instances", "constructed_ok", "oracle_confirmed", "failures"};
    table.rows.push_back({std::to_string(res.total), std::to_string(res.constructed_ok),
                          std::to_string(res.oracle_confirmed), std::to_string(res.failures)});
    out.csv("gf2.csv", table);
    json jdoc;
    jdoc["instances"] = res.total;
    jdoc["constructed_ok"] = res.constructed_ok;
    jdoc["oracle_confirmed"] = res.oracle_confirmed;
    jdoc["failures"] = res.failures;
    out.js("gf2.json", jdoc);
    return res.failures == 0 ? 0 : 1;
}

int cmd_symbolic(const ScenarioDoc& doc, const RunOptions&, ArtifactWriter& out) {
    int m = 4;
    bool demo = false;
    int demo_iters = 12;
    if (doc.root.contains("symbolic")) {
        const json& s = doc.root.at("symbolic");
        require_keys(s, "symbolic", {"m", "demo", "demo_iterations"});
        if (s.contains("m")) m = s.at("m").get<int>();
        if (s.contains("demo")) demo = s.at("demo").get<bool>();
        if (s.contains("demo_iterations")) demo_iters = s.at("demo_iterations").get<int>();
    }
    const SymbolWord q = build_Q(m);
    const QStructureReport rep = verify_Q_structure(q);

    std::printf("Q(m=%d) = %s\n", m, q.str().c_str());
    std::printf("period %d (expected %d) %s\n", rep.period, rep.expected_period,
                rep.period_ok ? "ok" : "FAIL");
    CsvTable table;
    table.header = {"j", "condition", "pass"};
    for (const auto& row : rep.rows) {
        std::printf("  j=%d  %-22s %s\n", row.j, row.condition.c_str(),
                    row.pass ? "pass" : "FAIL");
        table.rows.push_back({std::to_string(row.j), row.condition, row.pass ? "1" : "0"});
    }
    std::printf("all checks: %s\n", rep.all_pass ? "pass" : "FAIL");
    out.csv("symbolic.csv", table);

    json jdoc;
    jdoc["m"] = m;
    jdoc["word"] = q.str();
    jdoc["period"] = rep.period;
    jdoc["expected_period"] = rep.expected_period;
    jdoc["all_pass"] = rep.all_pass;
    json jrows = json::array();
    for (const auto& row : rep.rows)
        jrows.push_back({{"j", row.j}, {"condition", row.condition}, {"pass", row.pass}});
    jdoc["checks"] = jrows;

    if (demo) {
        const QBraidDemo d = q_braid_gamma_demo(m, demo_iters);
        std::printf("template braid on %d strands, %zu letters; gamma = %s, bound log(m-2) = %s\n",
                    d.braid.n_strands, d.braid.word.length(), format_float(d.estimate.rate).c_str(),
                    format_float(d.bound).c_str());
        jdoc["demo"] = {{"n_strands", d.braid.n_strands},
                        {"word", d.braid.word.str()},
                        {"gamma", format_float(d.estimate.rate)},
                        {"bound", format_float(d.bound)},
                        {"bound_met", d.bound_met}};
    }
    out.js("symbolic.json", jdoc);
    return 0;
}

} // namespace

void validate_scenario_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    require_keys(root, "scenario",
                 {"seed", "hamiltonian", "orbits", "braid", "entropy", "perturbation", "gf2",
                  "symbolic"});
}

int run_command(const std::string& command, const RunOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    RunOptions opt = options;
    ScenarioDoc doc;
    try {
        doc = load_scenario(opt.scenario_path);
        if (!opt.seed_from_cli && doc.root.contains("seed")) {
            if (!doc.root.at("seed").is_number_unsigned())
                throw ScenarioError("seed: expected a non-negative integer");
            opt.seed = doc.root.at("seed").get<std::uint64_t>();
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    std::filesystem::create_directories(opt.out_dir);
    ArtifactWriter out{opt.out_dir, opt.format, {}};

    int code = 0;
    try {
        if (command == "orbits") code = cmd_orbits(doc, opt, out);
        else if (command == "braid") code = cmd_braid(doc, opt, out);
        else if (command == "entropy") code = cmd_entropy(doc, opt, out);
        else if (command == "stability") code = cmd_stability(doc, opt, out);
        else if (command == "gf2-corpus") code = cmd_gf2(doc, opt, out);
        else if (command == "symbolic-check") code = cmd_symbolic(doc, opt, out);
        else {
            std::fprintf(stderr, "error: unknown command '%s'\n", command.c_str());
            return 2;
        }
    } catch (const ScenarioError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json manifest;
    manifest["command"] = command;
    manifest["config_hash"] = content_hash(doc.raw);
    manifest["seed"] = opt.seed;
    manifest["threads"] = opt.threads;
    manifest["format"] = format_name(opt.format);
    manifest["version"] = "0.1.0";
    // wall-clock timing; excluded from the byte-reproducibility guarantee
    manifest["elapsed_seconds"] = elapsed;
    write_text_file(opt.out_dir + "/manifest.json", manifest.dump(2) + "\n");
    return code;
}

} // namespace braidstab
