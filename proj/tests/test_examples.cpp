#include <doctest.h>

#include <cmath>

#include "bse/concurrence.hpp"
#include "bse/examples.hpp"
#include "bse/states.hpp"

using namespace bse;

namespace {

constexpr double kPi = 3.14159265358979323846;
const BeamSplitterParams kWeakBs = BeamSplitterParams::from_reflectivity(0.05, 0.0);

}  // namespace

TEST_SUITE_BEGIN("examples");

TEST_CASE("closed-form state of the balanced fock pair") {
  for (Detector det : {Detector::D1, Detector::D2}) {
    const double gamma = 1.3;
    const BipartiteState state =
        expected_state(ExampleSpec::fock(1, 1, gamma, det), kWeakBs.transmission());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(state.amplitude(0, 1) - Complex{inv_sqrt2, 0.0}) <= 1e-14);
    const Complex second = (det == Detector::D1 ? -1.0 : 1.0) * Complex{0.0, inv_sqrt2} *
                           std::polar(1.0, gamma);
    CHECK(std::abs(state.amplitude(1, 0) - second) <= 1e-14);
  }
}

TEST_CASE("closed forms match the protocol pipeline on a scenario grid") {
  const std::vector<ExampleSpec> scenarios{
      ExampleSpec::fock(1, 1, 0.0, Detector::D1),
      ExampleSpec::fock(3, 2, 2.1, Detector::D2),
      ExampleSpec::even_cat(Complex{1.2, 0.0}, 0.9, Detector::D1),
      ExampleSpec::even_cat(Complex{0.6, 0.4}, 4.0, Detector::D2),
      ExampleSpec::squeezed_vacuum(0.8, 0.5, 1.7, Detector::D1),
      ExampleSpec::hybrid(2, Complex{1.3, 0.0}, 5.5, Detector::D2),
  };
  for (const ExampleSpec& base : scenarios) {
    for (double gamma : {0.0, kPi / 3.0, kPi, 1.5 * kPi}) {
      for (Detector det : {Detector::D1, Detector::D2}) {
        ExampleSpec spec = base;
        spec.gamma = gamma;
        spec.detector = det;
        const BipartiteState target = expected_state(spec, kWeakBs.transmission());
        const ConditionalOutcome out = run_analytic(make_protocol_config(spec, kWeakBs));
        CHECK(1.0 - fidelity(out.normalized_state, target) <= 1e-10);
      }
    }
  }
}

TEST_CASE("scenarios without any photon to detect are flagged") {
  CHECK_THROWS_AS(expected_state(ExampleSpec::fock(0, 0, 0.0, Detector::D1), 0.99),
                  zero_probability_error);
  CHECK_THROWS_AS(
      expected_state(ExampleSpec::squeezed_vacuum(0.0, 0.0, 0.0, Detector::D1), 0.99),
      zero_probability_error);
  CHECK_THROWS_AS(expected_state(ExampleSpec::even_cat(Complex{0.0, 0.0}, 0.0, Detector::D1), 0.99),
                  zero_probability_error);
  CHECK_THROWS_AS(
      expected_state(ExampleSpec::hybrid(0, Complex{0.0, 0.0}, 0.0, Detector::D1), 0.99),
      zero_probability_error);
}

TEST_CASE("closed-form concurrence values") {
  const double t = kWeakBs.transmission();
  CHECK(expected_concurrence(ExampleSpec::fock(1, 1, 0.0, Detector::D1), t) == 1.0);
  CHECK(expected_concurrence(ExampleSpec::fock(2, 1, 0.0, Detector::D1), t) ==
        doctest::Approx(0.94280904158206337).epsilon(1e-14));
  CHECK(expected_concurrence(ExampleSpec::even_cat(Complex{0.9, 0.0}, 0.7, Detector::D2), t) ==
        1.0);
  CHECK(expected_concurrence(ExampleSpec::squeezed_vacuum(1.2, 0.0, 0.7, Detector::D1), t) ==
        1.0);

  // the hybrid value at |T alpha| = 0.5
  const ExampleSpec hybrid = ExampleSpec::hybrid(1, Complex{0.5 / t, 0.0}, 0.0, Detector::D1);
  CHECK(expected_concurrence(hybrid, t) ==
        doctest::Approx(0.46633880739660190).epsilon(1e-12));
  // which the basis-free oracle reproduces on the closed-form state
  CHECK(std::abs(concurrence_oracle(expected_state(hybrid, t)) -
                 expected_concurrence(hybrid, t)) <= 1e-9);
}

TEST_CASE("fock pair with a missing photon is a product state") {
  const double t = kWeakBs.transmission();
  CHECK(expected_concurrence(ExampleSpec::fock(0, 3, 0.0, Detector::D1), t) == 0.0);
  const BipartiteState state = expected_state(ExampleSpec::fock(0, 3, 0.9, Detector::D1), t);
  CHECK(std::abs(state.amplitude(0, 2)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence_oracle(state) <= 1e-12);
}

TEST_CASE("check report for the balanced fock pair passes") {
  const ExampleReport report =
      check_example(ExampleSpec::fock(1, 1, 4.712, Detector::D1), kWeakBs);
  CHECK(report.passed());
  CHECK(report.expected_concurrence == 1.0);
  CHECK(report.success_probability > 0.0);
  CHECK_FALSE(report.zero_probability);
}

TEST_CASE("check report flags zero-probability scenarios consistently") {
  const ExampleReport report =
      check_example(ExampleSpec::squeezed_vacuum(0.0, 0.0, 0.0, Detector::D1), kWeakBs);
  CHECK(report.zero_probability);
  CHECK(report.passed());
}

TEST_CASE("squeezed-vacuum scenario meets the tight concurrence budget") {
  const ExampleReport report =
      check_example(ExampleSpec::squeezed_vacuum(0.8, 0.0, 0.4, Detector::D1), kWeakBs);
  CHECK(report.passed());
  for (const CheckEntry& entry : report.entries)
    if (entry.name == "concurrence_error_formula") CHECK(entry.value <= 1e-9);
}

TEST_CASE("transmission rescales the squeeze parameter of the kept branch") {
  // u-component of the split squeezed vacuum is the squeezed vacuum with
  // tanh(r') = T^2 tanh(r), componentwise
  const TruncationConfig tight{1e-22, 400};
  for (double r : {0.5, 0.8}) {
    for (double theta : {0.0, 0.7}) {
      const SingleModeState sv = make_squeezed_vacuum({r, theta}, tight);
      const WeakSplitResult w = weak_split(sv, kWeakBs);
      const double t = kWeakBs.transmission();
      const SingleModeState rescaled =
          make_squeezed_vacuum({std::atanh(t * t * std::tanh(r)), theta}, tight);
      const int top = std::max(w.u.n_max(), rescaled.n_max());
      for (int n = 0; n <= top; ++n)
        CHECK(std::abs(w.u.amplitude(n) / w.mu - rescaled.amplitude(n)) <= 1e-10);
    }
  }
}

TEST_CASE("odd cat inputs herald a maximally entangled state too") {
  const SingleModeState odd = make_odd_cat({Complex{1.1, 0.0}});
  for (Detector det : {Detector::D1, Detector::D2}) {
    const ProtocolConfig cfg{odd, odd, kWeakBs, 0.8, det};
    const ConditionalOutcome out = run_analytic(cfg);
    CHECK(std::abs(concurrence_oracle(out.normalized_state) - 1.0) <= 1e-9);
    const ConcurrenceInputs in = concurrence_inputs(weak_split(odd, kWeakBs),
                                                    weak_split(odd, kWeakBs), cfg.gamma, det);
    CHECK(std::abs(concurrence_general(in) - 1.0) <= 1e-9);
  }
}

TEST_CASE("expected state rejects invalid parameters") {
  CHECK_THROWS_AS(expected_state(ExampleSpec::fock(-1, 2, 0.0, Detector::D1), 0.99),
                  std::domain_error);
  CHECK_THROWS_AS(expected_state(ExampleSpec::fock(1, 1, 0.0, Detector::D1), 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(expected_state(ExampleSpec::fock(1, 1, 0.0, Detector::D1), 1.5),
                  std::domain_error);
}

TEST_SUITE_END();
