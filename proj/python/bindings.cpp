#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bse/cli.hpp"
#include "bse/concurrence.hpp"
#include "bse/examples.hpp"
#include "bse/protocol.hpp"
#include "bse/states.hpp"
#include "bse/verify.hpp"

namespace py = pybind11;
using namespace bse;

namespace {

std::vector<std::vector<Complex>> bipartite_rows(const BipartiteState& s) {
  std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(s.n1_max()) + 1);
  for (int i = 0; i <= s.n1_max(); ++i) {
    rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(s.n2_max()) + 1);
    for (int j = 0; j <= s.n2_max(); ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.amplitude(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fock-space simulator for the beam-splitter entangler of two light fields";

  py::register_exception<capacity_error>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<zero_probability_error>(m, "ZeroProbabilityError", PyExc_ValueError);

  py::class_<TruncationConfig>(m, "TruncationConfig")
      .def(py::init([](double epsilon_tail, int n_max_cap) {
             TruncationConfig t{epsilon_tail, n_max_cap};
             t.validate();
             return t;
           }),
           py::arg("epsilon_tail") = 1e-12, py::arg("n_max_cap") = 200)
      .def_readonly("epsilon_tail", &TruncationConfig::epsilon_tail)
      .def_readonly("n_max_cap", &TruncationConfig::n_max_cap);

  py::class_<SingleModeState>(m, "SingleModeState")
      .def(py::init<std::vector<Complex>, bool>(), py::arg("amplitudes"),
           py::arg("normalized") = false)
      .def_property_readonly("n_max", &SingleModeState::n_max)
      .def_property_readonly("normalized", &SingleModeState::is_normalized)
      .def("amplitude", &SingleModeState::amplitude, py::arg("n"))
      .def("amplitudes", [](const SingleModeState& s) { return s.amplitudes(); })
      .def("squared_norm", &SingleModeState::squared_norm)
      .def("norm", &SingleModeState::norm)
      .def("mean_photon_number", &SingleModeState::mean_photon_number)
      .def("__len__", [](const SingleModeState& s) { return s.n_max() + 1; });

  py::class_<TwoModeState>(m, "TwoModeState")
      .def_property_readonly("k_max", &TwoModeState::k_max)
      .def_property_readonly("m_max", &TwoModeState::m_max)
      .def("amplitude", &TwoModeState::amplitude, py::arg("k"), py::arg("m"))
      .def("squared_norm", &TwoModeState::squared_norm)
      .def("weak_row_squared_norm", &TwoModeState::weak_row_squared_norm, py::arg("k"));

  py::class_<BipartiteState>(m, "BipartiteState")
      .def_property_readonly("n1_max", &BipartiteState::n1_max)
      .def_property_readonly("n2_max", &BipartiteState::n2_max)
      .def_property_readonly("normalized", &BipartiteState::is_normalized)
      .def("amplitude", &BipartiteState::amplitude, py::arg("n1"), py::arg("n2"))
      .def("amplitudes", &bipartite_rows)
      .def("squared_norm", &BipartiteState::squared_norm)
      .def("norm", &BipartiteState::norm);

  m.def("inner_product",
        py::overload_cast<const SingleModeState&, const SingleModeState&>(&inner_product),
        py::arg("a"), py::arg("b"));
  m.def("bipartite_inner_product",
        py::overload_cast<const BipartiteState&, const BipartiteState&>(&inner_product),
        py::arg("a"), py::arg("b"));
  m.def("apply_annihilation", &apply_annihilation, py::arg("state"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  m.def(
      "make_fock",
      [](int n, const TruncationConfig& t) { return make_fock(n, t); }, py::arg("n"),
      py::arg("trunc") = TruncationConfig{});
  m.def(
      "make_coherent",
      [](Complex alpha, const TruncationConfig& t) { return make_coherent({alpha}, t); },
      py::arg("alpha"), py::arg("trunc") = TruncationConfig{});
  m.def(
      "make_even_cat",
      [](Complex alpha, const TruncationConfig& t) { return make_even_cat({alpha}, t); },
      py::arg("alpha"), py::arg("trunc") = TruncationConfig{});
  m.def(
      "make_odd_cat",
      [](Complex alpha, const TruncationConfig& t) { return make_odd_cat({alpha}, t); },
      py::arg("alpha"), py::arg("trunc") = TruncationConfig{});
  m.def(
      "make_squeezed_vacuum",
      [](double r, double theta, const TruncationConfig& t) {
        return make_squeezed_vacuum({r, theta}, t);
      },
      py::arg("r"), py::arg("theta") = 0.0, py::arg("trunc") = TruncationConfig{});

  py::class_<BeamSplitterParams>(m, "BeamSplitterParams")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi") = 0.0)
      .def_static("from_reflectivity", &BeamSplitterParams::from_reflectivity, py::arg("r"),
                  py::arg("phi") = 0.0)
      .def_property_readonly("theta", &BeamSplitterParams::theta)
      .def_property_readonly("phi", &BeamSplitterParams::phi)
      .def_property_readonly("transmission", &BeamSplitterParams::transmission)
      .def_property_readonly("reflectivity", &BeamSplitterParams::reflectivity);

  m.def("bs_coefficient", &bs_coefficient, py::arg("n"), py::arg("k"), py::arg("params"));
  m.def("apply_bs_exact", &apply_bs_exact, py::arg("input"), py::arg("params"));
  m.def("truncation_residual", &truncation_residual, py::arg("input"), py::arg("params"));
  m.def("weak_regime", &weak_regime, py::arg("params"),
        py::arg("threshold") = kWeakReflectivityWarning);

  py::class_<WeakSplitResult>(m, "WeakSplitResult")
      .def_readonly("u", &WeakSplitResult::u)
      .def_readonly("v", &WeakSplitResult::v)
      .def_readonly("mu", &WeakSplitResult::mu)
      .def_readonly("nu", &WeakSplitResult::nu);
  m.def("weak_split", &weak_split, py::arg("input"), py::arg("params"));

  py::enum_<Detector>(m, "Detector").value("D1", Detector::D1).value("D2", Detector::D2);

  py::class_<ProtocolConfig>(m, "ProtocolConfig")
      .def(py::init<SingleModeState, SingleModeState, BeamSplitterParams, double, Detector>(),
           py::arg("psi1"), py::arg("psi2"), py::arg("bs"), py::arg("gamma") = 0.0,
           py::arg("detector") = Detector::D1)
      .def_readonly("psi1", &ProtocolConfig::psi1)
      .def_readonly("psi2", &ProtocolConfig::psi2)
      .def_readonly("bs", &ProtocolConfig::bs)
      .def_readonly("gamma", &ProtocolConfig::gamma)
      .def_readonly("detector", &ProtocolConfig::detector);

  py::class_<ConditionalOutcome>(m, "ConditionalOutcome")
      .def_readonly("state", &ConditionalOutcome::state)
      .def_readonly("success_probability", &ConditionalOutcome::success_probability)
      .def_readonly("normalized_state", &ConditionalOutcome::normalized_state);

  py::class_<ClickBranches>(m, "ClickBranches")
      .def_readonly("branches", &ClickBranches::branches)
      .def_readonly("probabilities", &ClickBranches::probabilities)
      .def_readonly("total_probability", &ClickBranches::total_probability);

  py::class_<DetectionProbabilities>(m, "DetectionProbabilities")
      .def_readonly("d1", &DetectionProbabilities::d1)
      .def_readonly("d2", &DetectionProbabilities::d2)
      .def_readonly("no_click", &DetectionProbabilities::no_click)
      .def_readonly("multi", &DetectionProbabilities::multi)
      .def("total", &DetectionProbabilities::total);

  m.def("run_analytic", &run_analytic, py::arg("config"));
  m.def("run_exact", &run_exact, py::arg("config"));
  m.def("exact_click_branches", &exact_click_branches, py::arg("config"));
  m.def("exact_analytic_infidelity", &exact_analytic_infidelity, py::arg("config"));
  m.def("detection_probabilities", &detection_probabilities, py::arg("config"));
  m.def(
      "success_probability_scaling",
      [](const ProtocolConfig& c, const std::vector<double>& r_values) {
        return success_probability_scaling(c, r_values);
      },
      py::arg("config"), py::arg("r_values"));

  py::class_<ConcurrenceInputs>(m, "ConcurrenceInputs")
      .def(py::init([](double mu1, double nu1, double mu2, double nu2, Complex overlap1,
                       Complex overlap2, double gamma, Detector detector) {
             return ConcurrenceInputs{mu1, nu1, mu2, nu2, overlap1, overlap2, gamma, detector};
           }),
           py::arg("mu1"), py::arg("nu1"), py::arg("mu2"), py::arg("nu2"), py::arg("overlap1"),
           py::arg("overlap2"), py::arg("gamma"), py::arg("detector"))
      .def_readonly("mu1", &ConcurrenceInputs::mu1)
      .def_readonly("nu1", &ConcurrenceInputs::nu1)
      .def_readonly("mu2", &ConcurrenceInputs::mu2)
      .def_readonly("nu2", &ConcurrenceInputs::nu2)
      .def_readonly("overlap1", &ConcurrenceInputs::overlap1)
      .def_readonly("overlap2", &ConcurrenceInputs::overlap2)
      .def_readonly("gamma", &ConcurrenceInputs::gamma)
      .def_readonly("detector", &ConcurrenceInputs::detector);

  m.def("concurrence_general", &concurrence_general, py::arg("inputs"));
  m.def("concurrence_identical", &concurrence_identical, py::arg("overlap_mag_sq"),
        py::arg("gamma"), py::arg("detector"));
  m.def("concurrence_oracle", &concurrence_oracle, py::arg("state"));
  m.def("concurrence_inputs", &concurrence_inputs, py::arg("arm1"), py::arg("arm2"),
        py::arg("gamma"), py::arg("detector"));
  m.def("example4_mes_residual", &example4_mes_residual, py::arg("n"), py::arg("t_alpha_mag"));
  m.def("example4_mes_root", &example4_mes_root, py::arg("n"));

  py::enum_<ExampleId>(m, "ExampleId")
      .value("Fock", ExampleId::Fock)
      .value("EvenCat", ExampleId::EvenCat)
      .value("SqueezedVacuum", ExampleId::SqueezedVacuum)
      .value("Hybrid", ExampleId::Hybrid);

  py::class_<ExampleSpec>(m, "ExampleSpec")
      .def_static("fock", &ExampleSpec::fock, py::arg("n"), py::arg("m"), py::arg("gamma"),
                  py::arg("detector"))
      .def_static("even_cat", &ExampleSpec::even_cat, py::arg("alpha"), py::arg("gamma"),
                  py::arg("detector"))
      .def_static("squeezed_vacuum", &ExampleSpec::squeezed_vacuum, py::arg("r"),
                  py::arg("theta"), py::arg("gamma"), py::arg("detector"))
      .def_static("hybrid", &ExampleSpec::hybrid, py::arg("n"), py::arg("alpha"),
                  py::arg("gamma"), py::arg("detector"))
      .def_readonly("id", &ExampleSpec::id)
      .def_readonly("n", &ExampleSpec::n)
      .def_readonly("m", &ExampleSpec::m)
      .def_readonly("alpha", &ExampleSpec::alpha)
      .def_readonly("r", &ExampleSpec::r)
      .def_readonly("theta", &ExampleSpec::theta)
      .def_readonly("gamma", &ExampleSpec::gamma)
      .def_readonly("detector", &ExampleSpec::detector);

  m.def(
      "example_inputs",
      [](const ExampleSpec& e, const TruncationConfig& t) { return example_inputs(e, t); },
      py::arg("spec"), py::arg("trunc") = TruncationConfig{});
  m.def(
      "make_protocol_config",
      [](const ExampleSpec& e, const BeamSplitterParams& bs, const TruncationConfig& t) {
        return make_protocol_config(e, bs, t);
      },
      py::arg("spec"), py::arg("bs"), py::arg("trunc") = TruncationConfig{});
  m.def(
      "expected_state",
      [](const ExampleSpec& e, double t, const TruncationConfig& trunc) {
        return expected_state(e, t, trunc);
      },
      py::arg("spec"), py::arg("t"), py::arg("trunc") = TruncationConfig{});
  m.def("expected_concurrence", &expected_concurrence, py::arg("spec"), py::arg("t"));

  py::class_<CheckEntry>(m, "CheckEntry")
      .def_readonly("name", &CheckEntry::name)
      .def_readonly("value", &CheckEntry::value)
      .def_readonly("bound", &CheckEntry::bound)
      .def_readonly("pass_", &CheckEntry::pass);

  py::class_<ExampleReport>(m, "ExampleReport")
      .def_readonly("transmission", &ExampleReport::transmission)
      .def_readonly("reflectivity", &ExampleReport::reflectivity)
      .def_readonly("success_probability", &ExampleReport::success_probability)
      .def_readonly("expected_concurrence", &ExampleReport::expected_concurrence)
      .def_readonly("zero_probability", &ExampleReport::zero_probability)
      .def_readonly("entries", &ExampleReport::entries)
      .def("passed", &ExampleReport::passed);

  m.def(
      "check_example",
      [](const ExampleSpec& e, const BeamSplitterParams& bs, const TruncationConfig& t) {
        return check_example(e, bs, t);
      },
      py::arg("spec"), py::arg("bs"), py::arg("trunc") = TruncationConfig{});

  m.def("parse_angle", &cli::parse_angle, py::arg("text"));
  m.def(
      "cli_main",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv;
        argv.push_back("bse");
        for (const std::string& a : args) argv.push_back(a.c_str());
        return cli::run(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"));
}
