#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "flexcool/config.hpp"
#include "flexcool/entanglement.hpp"
#include "flexcool/errors.hpp"
#include "flexcool/output.hpp"
#include "flexcool/params.hpp"
#include "flexcool/presets.hpp"
#include "flexcool/stability.hpp"
#include "flexcool/steadystate.hpp"
#include "flexcool/sweep.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Documents cross the boundary as JSON text; the Python wrapper decodes them.
flexcool::Document load(const std::string& text, const std::vector<std::string>& overrides) {
    json tree = flexcool::parse_document_text(text, "<python>");
    for (const auto& s : overrides) flexcool::apply_override(tree, s);
    return flexcool::document_from_json(tree);
}

json preset_tree(const std::string& name, const std::string& series, const std::vector<std::string>& overrides) {
    const auto& preset = flexcool::find_preset(name);
    const auto& s = series.empty() ? preset.series.at(preset.default_series) : preset.find_series(series);
    json tree = flexcool::preset_document(preset, s);
    for (const auto& o : overrides) flexcool::apply_override(tree, o);
    return flexcool::to_json(flexcool::document_from_json(tree));
}

std::vector<flexcool::Bipartition> bipartitions_of(const flexcool::Document& doc) {
    std::vector<flexcool::Bipartition> bips;
    if (doc.sweep) bips = doc.sweep->observables.bipartitions;
    if (bips.empty()) {
        const int n = static_cast<int>(doc.system.n_modes());
        for (int i = 0; i < n; ++i) bips.push_back(flexcool::Bipartition::mech_phonon(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) bips.push_back(flexcool::Bipartition::mech_mech(i, j));
    }
    return bips;
}

}  // namespace

PYBIND11_MODULE(_flexcool, m) {
    m.doc() = "Atomic phonon / graphene flexural mode cooling and entanglement";

    py::register_exception<flexcool::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<flexcool::UnstableSystem>(m, "UnstableSystem", PyExc_RuntimeError);

    m.def("thermal_occupation", &flexcool::thermal_occupation, py::arg("nu"), py::arg("temperature"));

    m.def("preset_names", [] {
        std::vector<std::string> names;
        for (const auto& p : flexcool::list_presets()) names.push_back(p.name);
        return names;
    });

    m.def("preset_document",
          [](const std::string& name, const std::string& series, const std::vector<std::string>& overrides) {
              return preset_tree(name, series, overrides).dump();
          },
          py::arg("name"), py::arg("series") = "", py::arg("overrides") = std::vector<std::string>{});

    m.def("simulate",
          [](const std::string& text, const std::vector<std::string>& overrides) {
              const auto doc = load(text, overrides);
              const auto bips = bipartitions_of(doc);
              flexcool::PointReport r;
              {
                  py::gil_scoped_release release;
                  r = flexcool::evaluate_point(doc.system, bips);
              }
              return flexcool::point_to_json(doc.system, r, bips).dump();
          },
          py::arg("document"), py::arg("overrides") = std::vector<std::string>{});

    m.def("sweep",
          [](const std::string& text, const std::vector<std::string>& overrides, unsigned threads) {
              const auto doc = load(text, overrides);
              if (!doc.sweep) throw flexcool::ConfigError("document has no sweep section");
              flexcool::SweepResult result;
              {
                  py::gil_scoped_release release;
                  result = flexcool::run_sweep(*doc.sweep, threads);
              }
              return flexcool::sweep_to_json(result, {{"config", flexcool::to_json(doc)}}).dump();
          },
          py::arg("document"), py::arg("overrides") = std::vector<std::string>{}, py::arg("threads") = 0u);

    m.def("drift_diffusion",
          [](const std::string& text) {
              const auto sys = flexcool::build_system(load(text, {}).system);
              return py::make_tuple(sys.drift, sys.diffusion);
          },
          py::arg("document"));

    m.def("solve_lyapunov", &flexcool::solve_lyapunov_dense, py::arg("drift"), py::arg("diffusion"),
          "Solves A V + V A^T = -D; the caller ensures A is Hurwitz.");

    m.def("is_stable",
          [](const Eigen::MatrixXd& a, double tol) { return flexcool::spectral_stability(a, tol).stable; },
          py::arg("drift"), py::arg("tolerance") = 0.0);

    m.def("log_negativity",
          [](const Eigen::Matrix4d& v) {
              const auto e = flexcool::entanglement(flexcool::BipartiteCovariance::from_matrix(v));
              return py::make_tuple(e.eta_minus, e.log_negativity);
          },
          py::arg("covariance"), "Returns (eta_minus, E_N) for a 4x4 two-mode covariance.");
}
