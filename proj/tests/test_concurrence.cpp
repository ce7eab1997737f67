#include <doctest.h>

#include <cmath>
#include <random>

#include "bse/concurrence.hpp"
#include "bse/examples.hpp"
#include "bse/protocol.hpp"
#include "bse/states.hpp"
#include "bse/verify.hpp"

using namespace bse;

namespace {

constexpr double kPi = 3.14159265358979323846;

double hybrid_concurrence_formula(int n, double x) {
  return 2.0 * std::sqrt(x) * std::sqrt(n * std::sinh(x) * std::cosh(x)) /
         (x * std::sinh(x) + n * std::cosh(x));
}

}  // namespace

TEST_SUITE_BEGIN("concurrence");

TEST_CASE("orthogonal balanced branches are maximally entangled") {
  ConcurrenceInputs in;
  in.mu1 = in.mu2 = 0.8;
  in.nu1 = in.nu2 = 0.3;  // mu1 nu2 = nu1 mu2
  in.gamma = 1.234;
  CHECK(concurrence_general(in) == doctest::Approx(1.0).epsilon(1e-14));
  in.detector = Detector::D2;
  CHECK(concurrence_general(in) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("a missing one-photon branch yields a product state") {
  ConcurrenceInputs in;
  in.mu1 = 0.9;
  in.nu1 = 0.4;
  in.mu2 = 0.8;
  in.nu2 = 0.0;
  CHECK(concurrence_general(in) == 0.0);
}

TEST_CASE("general formula reduces to the identical-input one") {
  ConcurrenceInputs in;
  in.mu1 = in.mu2 = 0.7;
  in.nu1 = in.nu2 = 0.2;
  in.overlap1 = in.overlap2 = Complex{std::sqrt(0.5), 0.0};
  in.gamma = 0.0;
  in.detector = Detector::D1;
  CHECK(concurrence_general(in) ==
        doctest::Approx(concurrence_identical(0.5, 0.0, Detector::D1)).epsilon(1e-14));
}

TEST_CASE("both arms without a one-photon branch is an error") {
  ConcurrenceInputs in;
  in.mu1 = in.mu2 = 1.0;
  in.nu1 = in.nu2 = 0.0;
  CHECK_THROWS_AS(concurrence_general(in), std::domain_error);
}

TEST_CASE("identical-input formula hits its closed-form values") {
  for (double gamma : {0.0, 0.9, kPi / 2.0, 1.8 * kPi}) {
    CHECK(concurrence_identical(0.0, gamma, Detector::D1) == doctest::Approx(1.0));
    CHECK(concurrence_identical(0.0, gamma, Detector::D2) == doctest::Approx(1.0));
  }
  for (double s2 : {0.1, 0.5, 0.9}) {
    CHECK(concurrence_identical(s2, 1.5 * kPi, Detector::D1) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_identical(s2, 0.5 * kPi, Detector::D2) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(concurrence_identical(0.5, kPi / 2.0, Detector::D1) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(concurrence_identical(1.0, 1.5 * kPi, Detector::D1), std::domain_error);
  CHECK_THROWS_AS(concurrence_identical(1.2, 0.0, Detector::D1), std::domain_error);
}

TEST_CASE("oracle on product and bell-type states") {
  CHECK(concurrence_oracle(tensor(make_fock(1), make_fock(0))) == 0.0);

  const BipartiteState bell =
      BipartiteState::superposition(Complex{1.0, 0.0}, tensor(make_fock(0), make_fock(1)),
                                    Complex{0.0, -1.0}, tensor(make_fock(1), make_fock(0)))
          .normalized();
  CHECK(concurrence_oracle(bell) == doctest::Approx(1.0).epsilon(1e-14));

  BipartiteState unnormalized(1, 1);
  unnormalized.set(0, 0, Complex{0.7, 0.0});
  CHECK_THROWS_AS(concurrence_oracle(unnormalized), std::domain_error);
}

TEST_CASE("oracle agrees with the hybrid closed form at unit cat amplitude") {
  const double t = 0.998749217771909;  // R = 0.05
  const ExampleSpec spec =
      ExampleSpec::hybrid(1, Complex{1.0 / t, 0.0}, 1.5 * kPi, Detector::D1);
  const double from_oracle = concurrence_oracle(expected_state(spec, t));
  const double from_formula = hybrid_concurrence_formula(1, 1.0);
  CHECK(from_formula == doctest::Approx(0.99079985926082257).epsilon(1e-12));
  CHECK(std::abs(from_oracle - from_formula) <= 1e-10);
}

TEST_CASE("mes root of the hybrid condition") {
  const double root1 = example4_mes_root(1);
  CHECK(root1 * root1 == doctest::Approx(1.19967864025773).epsilon(1e-10));
  CHECK(std::abs(root1 * root1 - 1.19968) <= 1e-4);
  CHECK(std::abs(example4_mes_residual(1, root1)) <= 1e-10);

  const double root2 = example4_mes_root(2);
  CHECK(root2 * root2 == doctest::Approx(2.06533813897470).epsilon(1e-10));
  CHECK(std::abs(example4_mes_residual(2, root2)) <= 1e-10);

  CHECK_THROWS_AS(example4_mes_root(0), std::domain_error);
  CHECK_THROWS_AS(example4_mes_residual(0, 1.0), std::domain_error);
}

TEST_CASE("hybrid state at the mes root is maximally entangled") {
  const double t = 0.998749217771909;
  const double root = example4_mes_root(1);
  const ExampleSpec spec =
      ExampleSpec::hybrid(1, Complex{root / t, 0.0}, 1.5 * kPi, Detector::D1);
  CHECK(std::abs(concurrence_oracle(expected_state(spec, t)) - 1.0) <= 1e-8);
}

TEST_CASE("hybrid concurrence is unimodal with its peak at the root") {
  const int n = 1;
  const double root_x = example4_mes_root(n) * example4_mes_root(n);
  double prev = 0.0;
  bool decreasing = false;
  for (int i = 0; i < 60; ++i) {
    const double x = 0.1 + (4.0 - 0.1) * i / 59.0;
    const double c = hybrid_concurrence_formula(n, x);
    CHECK(c <= 1.0 + 1e-12);
    if (i > 0) {
      if (c < prev - 1e-12) decreasing = true;
      if (decreasing) CHECK(c <= prev + 1e-12);  // never rises again
      if (!decreasing) CHECK(x <= root_x + 4.0 / 59.0 + 1e-9);
    }
    prev = c;
  }
  CHECK(decreasing);
}

TEST_CASE("formula and oracle agree on conditional protocol outputs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int i = 0; i < 40; ++i) {
    const Detector det = i % 2 == 0 ? Detector::D1 : Detector::D2;
    const ProtocolConfig cfg{random_state(rng, 12), random_state(rng, 12),
                             BeamSplitterParams::from_reflectivity(0.06, angle(rng)), angle(rng),
                             det};
    const ConditionalOutcome out = run_analytic(cfg);
    if (out.success_probability <= 1e-18) continue;
    const ConcurrenceInputs in = concurrence_inputs(
        weak_split(cfg.psi1, cfg.bs), weak_split(cfg.psi2, cfg.bs), cfg.gamma, cfg.detector);
    const double via_formula = concurrence_general(in);
    const double via_oracle = concurrence_oracle(out.normalized_state);
    CHECK(std::abs(via_formula - via_oracle) <= 1e-9);
    CHECK(via_formula >= -1e-9);
    CHECK(via_formula <= 1.0 + 1e-9);
  }
}

TEST_CASE("identical coherent inputs never entangle") {
  const BeamSplitterParams bs = BeamSplitterParams::from_reflectivity(0.05, 0.0);
  const SingleModeState coherent = make_coherent({Complex{0.8, 0.0}});
  const ConcurrenceInputs in =
      concurrence_inputs(weak_split(coherent, bs), weak_split(coherent, bs), 0.0, Detector::D1);
  CHECK(std::abs(in.overlap1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence_general(in) <= 1e-9);

  // at the would-be MES phase the click amplitude destructively vanishes:
  // nothing is ever heralded there
  ProtocolConfig cfg{coherent, coherent, bs, 1.5 * kPi, Detector::D1};
  const double p_destructive = run_analytic(cfg).success_probability;
  cfg.gamma = 0.0;
  const double p_reference = run_analytic(cfg).success_probability;
  CHECK(p_destructive <= 1e-9 * p_reference);

  // exactly unit overlap at that phase has no conditional state at all
  ConcurrenceInputs degenerate = in;
  degenerate.overlap1 = degenerate.overlap2 = Complex{1.0, 0.0};
  degenerate.gamma = 1.5 * kPi;
  CHECK_THROWS_AS(concurrence_general(degenerate), std::domain_error);
}

TEST_SUITE_END();
