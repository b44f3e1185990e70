#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidstab/braid_geometry.hpp"
#include "braidstab/gamma.hpp"
#include "braidstab/garside.hpp"
#include "braidstab/gf2.hpp"
#include "braidstab/horseshoe_template.hpp"
#include "braidstab/orbits.hpp"
#include "braidstab/presets.hpp"
#include "braidstab/symbolic.hpp"

namespace py = pybind11;
using namespace braidstab;

namespace {

py::dict orbit_to_dict(const PeriodicOrbit& o) {
    py::dict d;
    d["seed"] = py::make_tuple(o.seed.lift.x, o.seed.lift.y);
    d["period"] = o.period_k;
    d["type"] = orbit_type_name(o.type);
    d["nondegenerate"] = o.nondegenerate;
    d["multipliers"] = py::make_tuple(py::make_tuple(o.multipliers.re1, o.multipliers.im1),
                                      py::make_tuple(o.multipliers.re2, o.multipliers.im2));
    if (o.action) d["action"] = *o.action;
    d["homotopy_class"] = o.homotopy_class.str();
    d["residual"] = o.residual;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "braids, entropy bounds and Hofer-stability experiments for "
              "periodic orbits of Hamiltonian surface flows";

    m.def("hamiltonian_value",
          [](const std::string& preset, const ParamMap& params, double t, double x, double y) {
              return make_preset(preset, params).value(t, SurfacePoint(x, y));
          },
          py::arg("preset"), py::arg("params") = ParamMap{}, py::arg("t") = 0.0,
          py::arg("x") = 0.0, py::arg("y") = 0.0);

    m.def("integrate",
          [](const std::string& preset, const ParamMap& params, double x, double y, double t0,
             double t1, double step) {
              auto H = make_preset(preset, params);
              const Trajectory tr = integrate_flow(H, SurfacePoint(x, y), t0, t1, step);
              std::vector<std::tuple<double, double, double>> out;
              out.reserve(tr.size());
              for (std::size_t i = 0; i < tr.size(); ++i)
                  out.emplace_back(tr.times[i], tr.points[i].lift.x, tr.points[i].lift.y);
              return out;
          },
          py::arg("preset"), py::arg("params") = ParamMap{}, py::arg("x") = 0.0,
          py::arg("y") = 0.0, py::arg("t0") = 0.0, py::arg("t1") = 1.0, py::arg("step") = 1e-3);

    m.def("hofer_norm",
          [](const std::string& preset, const ParamMap& params, int t_grid, int space_grid) {
              return hofer_norm(make_preset(preset, params), t_grid, space_grid).value;
          },
          py::arg("preset"), py::arg("params") = ParamMap{}, py::arg("t_grid") = 256,
          py::arg("space_grid") = 129);

    m.def("find_periodic_points",
          [](const std::string& preset, const ParamMap& params, int k, int grid_n,
             double radius) {
              auto H = make_preset(preset, params);
              SeedGrid grid;
              grid.nx = grid.ny = grid_n;
              grid.radius = radius;
              const OrbitSet set = find_periodic_points(H, k, grid);
              py::list out;
              for (const auto& o : set.orbits) out.append(orbit_to_dict(o));
              return out;
          },
          py::arg("preset"), py::arg("params") = ParamMap{}, py::arg("k") = 1,
          py::arg("grid_n") = 16, py::arg("radius") = 0.9);

    m.def("braid_word_of_rotation",
          [](const std::vector<double>& angles, double radius, double rotation, double theta) {
              const GeometricBraid braid = rigid_rotation_braid(angles, radius, rotation);
              return braid_word_from_geometric(braid, theta).str();
          },
          py::arg("angles"), py::arg("radius") = 0.7, py::arg("rotation") = 2 * 3.14159265358979,
          py::arg("theta") = 0.05);

    m.def("words_equal",
          [](const std::string& a, const std::string& b, int n) {
              return words_equal(BraidWord::parse(a, n), BraidWord::parse(b, n));
          },
          py::arg("a"), py::arg("b"), py::arg("n_strands"));

    m.def("normal_form_str",
          [](const std::string& w, int n) { return normal_form(BraidWord::parse(w, n)).str(); },
          py::arg("word"), py::arg("n_strands"));

    m.def("are_conjugate",
          [](const std::string& a, const std::string& b, int n, long budget) {
              const ConjugacyResult r =
                  are_conjugate(BraidWord::parse(a, n), BraidWord::parse(b, n), budget);
              py::dict d;
              d["answer"] = r.answer == ConjugacyAnswer::Yes
                                ? "yes"
                                : (r.answer == ConjugacyAnswer::No ? "no" : "unknown");
              if (r.witness) d["witness"] = r.witness->str();
              if (!r.invariant.empty()) d["invariant"] = r.invariant;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("n_strands"), py::arg("budget") = 4000);

    m.def("gamma_estimate",
          [](const std::string& word, int n, int iterations) {
              const GrowthEstimate est = gamma_estimate(BraidWord::parse(word, n), iterations);
              py::dict d;
              d["rate"] = est.rate;
              d["saturated"] = est.saturated;
              py::list probes;
              for (const auto& p : est.probes) {
                  py::dict pd;
                  pd["label"] = p.label;
                  pd["rate"] = p.rate;
                  pd["final_length"] = p.lengths.back();
                  probes.append(pd);
              }
              d["probes"] = probes;
              return d;
          },
          py::arg("word"), py::arg("n_strands"), py::arg("iterations") = 18);

    m.def("build_q",
          [](int m) {
              const SymbolWord q = build_Q(m);
              return q.period;
          },
          py::arg("m"));

    m.def("verify_q_structure",
          [](int m) {
              const QStructureReport rep = verify_Q_structure(m);
              py::dict d;
              d["m"] = rep.m;
              d["period"] = rep.period;
              d["expected_period"] = rep.expected_period;
              d["all_pass"] = rep.all_pass;
              return d;
          },
          py::arg("m"));

    m.def("q_braid_gamma",
          [](int m, int iterations) {
              const QBraidDemo d = q_braid_gamma_demo(m, iterations);
              py::dict out;
              out["n_strands"] = d.braid.n_strands;
              out["word"] = d.braid.word.str();
              out["gamma"] = d.estimate.rate;
              out["bound"] = d.bound;
              out["bound_met"] = d.bound_met;
              return out;
          },
          py::arg("m"), py::arg("iterations") = 12);

    m.def("gf2_corpus",
          [](int instances, std::uint64_t seed) {
              const GF2CorpusResult r = run_gf2_corpus(instances, seed);
              py::dict d;
              d["total"] = r.total;
              d["constructed_ok"] = r.constructed_ok;
              d["oracle_confirmed"] = r.oracle_confirmed;
              d["failures"] = r.failures;
              return d;
          },
          py::arg("instances") = 100, py::arg("seed") = 1);
}
