#include "bse/examples.hpp"

#include <cmath>

namespace bse {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex branch2_phase(const ExampleSpec& e) {
  return (e.detector == Detector::D1 ? -1.0 : 1.0) * kI * std::polar(1.0, e.gamma);
}

BipartiteState normalized_two_term(Complex c1, const BipartiteState& s1, Complex c2,
                                   const BipartiteState& s2) {
  return BipartiteState::superposition(c1, s1, c2, s2).normalized();
}

}  // namespace

const char* to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Fock: return "fock";
    case ExampleId::EvenCat: return "evencat";
    case ExampleId::SqueezedVacuum: return "sv";
    case ExampleId::Hybrid: return "hybrid";
  }
  return "?";
}

ExampleSpec ExampleSpec::fock(int n, int m, double gamma, Detector d) {
  ExampleSpec e;
  e.id = ExampleId::Fock;
  e.n = n;
  e.m = m;
  e.gamma = gamma;
  e.detector = d;
  return e;
}

ExampleSpec ExampleSpec::even_cat(Complex alpha, double gamma, Detector d) {
  ExampleSpec e;
  e.id = ExampleId::EvenCat;
  e.alpha = alpha;
  e.gamma = gamma;
  e.detector = d;
  return e;
}

ExampleSpec ExampleSpec::squeezed_vacuum(double r, double theta, double gamma, Detector d) {
  ExampleSpec e;
  e.id = ExampleId::SqueezedVacuum;
  e.r = r;
  e.theta = theta;
  e.gamma = gamma;
  e.detector = d;
  return e;
}

ExampleSpec ExampleSpec::hybrid(int n, Complex alpha, double gamma, Detector d) {
  ExampleSpec e;
  e.id = ExampleId::Hybrid;
  e.n = n;
  e.alpha = alpha;
  e.gamma = gamma;
  e.detector = d;
  return e;
}

std::pair<SingleModeState, SingleModeState> example_inputs(const ExampleSpec& e,
                                                           const TruncationConfig& trunc) {
  switch (e.id) {
    case ExampleId::Fock:
      return {make_fock(e.n, trunc), make_fock(e.m, trunc)};
    case ExampleId::EvenCat: {
      SingleModeState cat = make_even_cat({e.alpha}, trunc);
      return {cat, cat};
    }
    case ExampleId::SqueezedVacuum: {
      SingleModeState sv = make_squeezed_vacuum({e.r, e.theta}, trunc);
      return {sv, sv};
    }
    case ExampleId::Hybrid:
      return {make_fock(e.n, trunc), make_even_cat({e.alpha}, trunc)};
  }
  throw std::domain_error("example_inputs: unknown example id");
}

ProtocolConfig make_protocol_config(const ExampleSpec& e, const BeamSplitterParams& bs,
                                    const TruncationConfig& trunc) {
  auto [psi1, psi2] = example_inputs(e, trunc);
  return ProtocolConfig{std::move(psi1), std::move(psi2), bs, e.gamma, e.detector};
}

BipartiteState expected_state(const ExampleSpec& e, double t, const TruncationConfig& trunc) {
  if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("expected_state: t must lie in (0, 1]");
  const Complex c2_phase = branch2_phase(e);

  switch (e.id) {
    case ExampleId::Fock: {
      if (e.n < 0 || e.m < 0) throw std::domain_error("expected_state: negative photon number");
      if (e.n == 0 && e.m == 0)
        throw zero_probability_error("expected_state: vacuum inputs never produce a click");
      const double total = static_cast<double>(e.n + e.m);
      BipartiteState state(e.n, e.m, false);
      if (e.n >= 1) state.set(e.n - 1, e.m, std::sqrt(e.n / total));
      if (e.m >= 1) state.set(e.n, e.m - 1, c2_phase * std::sqrt(e.m / total));
      return state.normalized();
    }
    case ExampleId::EvenCat: {
      if (e.alpha == Complex{0.0, 0.0})
        throw zero_probability_error("expected_state: even cat at alpha = 0 is the vacuum");
      const Complex ta = t * e.alpha;
      const SingleModeState even = make_even_cat({ta}, trunc);
      const SingleModeState odd = make_odd_cat({ta}, trunc);
      const double w = 1.0 / std::sqrt(2.0);
      return normalized_two_term(w, tensor(odd, even), w * c2_phase, tensor(even, odd));
    }
    case ExampleId::SqueezedVacuum: {
      if (e.r == 0.0)
        throw zero_probability_error("expected_state: squeezed vacuum at r = 0 is the vacuum");
      const double r_bar = std::atanh(t * t * std::tanh(e.r));
      const SingleModeState sv = make_squeezed_vacuum({r_bar, e.theta}, trunc);
      const SingleModeState lowered = apply_annihilation(sv);
      const double lowered_norm = lowered.norm();
      if (lowered_norm == 0.0)
        throw zero_probability_error(
            "expected_state: squeezing below the truncation resolution");
      std::vector<Complex> unit(lowered.amplitudes());
      for (Complex& a : unit) a /= lowered_norm;
      const SingleModeState lowered_unit(std::move(unit), true);
      const double w = 1.0 / std::sqrt(2.0);
      return normalized_two_term(w, tensor(lowered_unit, sv), w * c2_phase,
                                 tensor(sv, lowered_unit));
    }
    case ExampleId::Hybrid: {
      if (e.n < 0) throw std::domain_error("expected_state: negative photon number");
      const Complex ta = t * e.alpha;
      const double x = std::norm(ta);
      if (e.n == 0 && x == 0.0)
        throw zero_probability_error("expected_state: vacuum-equivalent hybrid inputs");
      if (x == 0.0) {
        BipartiteState state(e.n - 1, 0, false);
        state.set(e.n - 1, 0, 1.0);
        return state.normalized();
      }
      const SingleModeState even = make_even_cat({ta}, trunc);
      const Complex c1 = (e.n >= 1) ? Complex{std::sqrt(e.n * std::cosh(x)), 0.0}
                                    : Complex{0.0, 0.0};
      const Complex c2 = c2_phase * ta * std::sqrt(std::sinh(x));
      const SingleModeState odd = make_odd_cat({ta}, trunc);
      const BipartiteState first =
          (e.n >= 1) ? tensor(make_fock(e.n - 1, trunc), even) : BipartiteState(0, 0);
      return normalized_two_term(c1, first, c2, tensor(make_fock(e.n, trunc), odd));
    }
  }
  throw std::domain_error("expected_state: unknown example id");
}

double expected_concurrence(const ExampleSpec& e, double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::domain_error("expected_concurrence: t must lie in (0, 1]");
  switch (e.id) {
    case ExampleId::Fock: {
      if (e.n == 0 && e.m == 0)
        throw zero_probability_error("expected_concurrence: vacuum inputs");
      return 2.0 * std::sqrt(static_cast<double>(e.n) * e.m) / (e.n + e.m);
    }
    case ExampleId::EvenCat:
      if (e.alpha == Complex{0.0, 0.0})
        throw zero_probability_error("expected_concurrence: even cat at alpha = 0");
      return 1.0;
    case ExampleId::SqueezedVacuum:
      if (e.r == 0.0) throw zero_probability_error("expected_concurrence: r = 0");
      return 1.0;
    case ExampleId::Hybrid: {
      const double x = std::norm(t * e.alpha);
      if (e.n == 0 && x == 0.0)
        throw zero_probability_error("expected_concurrence: vacuum-equivalent hybrid");
      if (e.n == 0 || x == 0.0) return 0.0;
      return 2.0 * std::sqrt(x) * std::sqrt(e.n * std::sinh(x) * std::cosh(x)) /
             (x * std::sinh(x) + e.n * std::cosh(x));
    }
  }
  throw std::domain_error("expected_concurrence: unknown example id");
}

bool ExampleReport::passed() const {
  for (const CheckEntry& entry : entries)
    if (!entry.pass) return false;
  return true;
}

ExampleReport check_example(const ExampleSpec& e, const BeamSplitterParams& bs,
                            const TruncationConfig& trunc, const CheckTolerances& tol) {
  ExampleReport report;
  report.spec = e;
  report.transmission = bs.transmission();
  report.reflectivity = bs.reflectivity();

  auto add = [&report](const std::string& name, double value, double bound) {
    report.entries.push_back({name, value, bound, value <= bound});
  };

  const ProtocolConfig cfg = make_protocol_config(e, bs, trunc);
  const ConditionalOutcome analytic = run_analytic(cfg);
  const ConditionalOutcome exact = run_exact(cfg);
  report.success_probability = exact.success_probability;

  BipartiteState target(0, 0);
  try {
    target = expected_state(e, bs.transmission(), trunc);
  } catch (const zero_probability_error&) {
    report.zero_probability = true;
    add("zero_probability_analytic", analytic.success_probability, 0.0);
    add("zero_probability_exact", exact.success_probability, 0.0);
    return report;
  }
  report.expected_concurrence = expected_concurrence(e, bs.transmission());

  const double r_sq = bs.reflectivity() * bs.reflectivity();
  add("analytic_state_infidelity", 1.0 - fidelity(analytic.normalized_state, target),
      tol.analytic_fidelity);
  add("exact_state_infidelity", 1.0 - fidelity(exact.normalized_state, target),
      std::max(tol.analytic_fidelity, tol.exact_per_r_sq * r_sq));
  add("exact_vs_analytic_infidelity", exact_analytic_infidelity(cfg),
      tol.exact_per_r_sq * r_sq);

  const double c_oracle_analytic = concurrence_oracle(analytic.normalized_state);
  add("concurrence_error_analytic", std::abs(c_oracle_analytic - report.expected_concurrence),
      tol.concurrence_analytic);

  const ConcurrenceInputs inputs = concurrence_inputs(
      weak_split(cfg.psi1, cfg.bs), weak_split(cfg.psi2, cfg.bs), e.gamma, e.detector);
  add("concurrence_error_formula", std::abs(concurrence_general(inputs) - report.expected_concurrence),
      tol.concurrence_analytic);

  const double c_oracle_exact = concurrence_oracle(exact.normalized_state);
  add("concurrence_error_exact", std::abs(c_oracle_exact - report.expected_concurrence),
      tol.concurrence_exact);

  add("success_probability_positive", exact.success_probability > 0.0 ? 0.0 : 1.0, 0.0);
  return report;
}

}  // namespace bse
