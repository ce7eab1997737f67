#include "bse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bse/concurrence.hpp"
#include "bse/examples.hpp"
#include "bse/protocol.hpp"
#include "bse/states.hpp"

namespace bse {

SingleModeState random_state(std::mt19937_64& rng, int max_n, int parity) {
  std::uniform_int_distribution<int> size_dist(1, max_n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n_top = size_dist(rng);
  std::vector<Complex> amps(static_cast<std::size_t>(n_top) + 1, Complex{0.0, 0.0});
  for (int n = 0; n <= n_top; ++n) {
    if (parity >= 0 && n % 2 != parity) continue;
    amps[static_cast<std::size_t>(n)] = Complex{gauss(rng), gauss(rng)};
  }
  double sq = 0.0;
  for (const Complex& a : amps) sq += std::norm(a);
  if (sq == 0.0) {
    amps[parity == 1 ? 1 : 0] = Complex{1.0, 0.0};
    sq = 1.0;
  }
  const double scale = 1.0 / std::sqrt(sq);
  for (Complex& a : amps) a *= scale;
  return SingleModeState(std::move(amps), true);
}

double log_log_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::domain_error("log_log_slope: need at least two points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::domain_error("log_log_slope: points must be positive");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double mx = sx / points.size();
  const double my = sy / points.size();
  double num = 0.0, den = 0.0;
  for (const auto& [x, y] : points) {
    num += (std::log(x) - mx) * (std::log(y) - my);
    den += (std::log(x) - mx) * (std::log(x) - mx);
  }
  return num / den;
}

namespace {

struct Recorder {
  SuiteResult result;
  explicit Recorder(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
  }
  void observe(double deviation) {
    result.worst = std::max(result.worst, std::abs(deviation));
    ++result.cases;
  }
  SuiteResult finish() {
    result.pass = result.worst <= result.tolerance;
    return result;
  }
};

BeamSplitterParams random_weak_bs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r_dist(0.01, 0.18);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  return BeamSplitterParams::from_reflectivity(r_dist(rng), phi_dist(rng));
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  if (options.corpus_size < 1) throw std::domain_error("run_verification: corpus_size >= 1");
  const double oracle_tol = options.profile == VerifyOptions::Profile::Strict ? 1e-11 : 1e-9;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SuiteResult> results;

  {
    Recorder rec("beam_splitter_unitarity", 1e-12);
    std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
    for (int i = 0; i < options.corpus_size; ++i) {
      const SingleModeState psi = random_state(rng, 40);
      const BeamSplitterParams bs(theta_dist(rng), angle(rng));
      rec.observe(apply_bs_exact(psi, bs).squared_norm() - psi.squared_norm());
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("photon_number_conservation", 0.0);
    std::uniform_int_distribution<int> n_dist(0, 12);
    std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
    for (int i = 0; i < options.corpus_size; ++i) {
      const int n = n_dist(rng);
      const TwoModeState out =
          apply_bs_exact(make_fock(n), BeamSplitterParams(theta_dist(rng), angle(rng)));
      for (int k = 0; k <= out.k_max(); ++k)
        for (int m = 0; m <= out.m_max(); ++m)
          if (k + m != n) rec.observe(std::abs(out.amplitude(k, m)));
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("weak_split_probability_bookkeeping", 1e-12);
    for (int i = 0; i < options.corpus_size; ++i) {
      const SingleModeState psi = random_state(rng, 30);
      const BeamSplitterParams bs = random_weak_bs(rng);
      const WeakSplitResult w = weak_split(psi, bs);
      const double r = bs.reflectivity();
      rec.observe(w.mu * w.mu + r * r * w.nu * w.nu + truncation_residual(psi, bs) - 1.0);
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("tensor_norm_multiplicativity", 1e-12);
    for (int i = 0; i < options.corpus_size; ++i) {
      const SingleModeState a = random_state(rng, 20);
      const SingleModeState b = random_state(rng, 20);
      rec.observe(tensor(a, b).norm() - a.norm() * b.norm());
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("identical_input_concurrence_reduction", 1e-12);
    std::uniform_real_distribution<double> mag(0.0, 0.999);
    for (int i = 0; i < options.corpus_size * 40; ++i) {
      ConcurrenceInputs in;
      in.mu1 = in.mu2 = 0.05 + 0.95 * unit(rng);
      in.nu1 = in.nu2 = 0.05 + 0.95 * unit(rng);
      in.overlap1 = in.overlap2 = std::polar(mag(rng), angle(rng));
      in.gamma = angle(rng);
      in.detector = unit(rng) < 0.5 ? Detector::D1 : Detector::D2;
      const double via_general = concurrence_general(in);
      const double via_identical =
          concurrence_identical(std::norm(in.overlap1), in.gamma, in.detector);
      rec.observe(via_general - via_identical);
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("concurrence_formula_vs_oracle", oracle_tol);
    for (int i = 0; i < options.corpus_size; ++i) {
      const ProtocolConfig cfg{random_state(rng, 14), random_state(rng, 14), random_weak_bs(rng),
                               angle(rng), unit(rng) < 0.5 ? Detector::D1 : Detector::D2};
      const ConditionalOutcome outcome = run_analytic(cfg);
      if (outcome.success_probability <= 1e-20) continue;
      const ConcurrenceInputs in = concurrence_inputs(weak_split(cfg.psi1, cfg.bs),
                                                      weak_split(cfg.psi2, cfg.bs), cfg.gamma,
                                                      cfg.detector);
      rec.observe(concurrence_general(in) - concurrence_oracle(outcome.normalized_state));
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("detector_symmetry", 1e-10);
    for (int i = 0; i < options.corpus_size; ++i) {
      ProtocolConfig cfg{random_state(rng, 12), random_state(rng, 12), random_weak_bs(rng),
                         angle(rng), Detector::D1};
      ProtocolConfig swapped = cfg;
      swapped.detector = Detector::D2;
      swapped.gamma = cfg.gamma - std::numbers::pi;
      const ConditionalOutcome a = run_exact(cfg);
      const ConditionalOutcome b = run_exact(swapped);
      if (a.success_probability <= 1e-20 || b.success_probability <= 1e-20) continue;
      rec.observe(1.0 - fidelity(a.normalized_state, b.normalized_state));
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("gamma_periodicity", 1e-12);
    for (int i = 0; i < options.corpus_size; ++i) {
      ProtocolConfig cfg{random_state(rng, 12), random_state(rng, 12), random_weak_bs(rng),
                         angle(rng), unit(rng) < 0.5 ? Detector::D1 : Detector::D2};
      ProtocolConfig shifted = cfg;
      shifted.gamma = cfg.gamma + 2.0 * std::numbers::pi;
      const ConditionalOutcome a = run_analytic(cfg);
      const ConditionalOutcome b = run_analytic(shifted);
      for (int n1 = 0; n1 <= a.state.n1_max(); ++n1)
        for (int n2 = 0; n2 <= a.state.n2_max(); ++n2)
          rec.observe(std::abs(a.state.amplitude(n1, n2) - b.state.amplitude(n1, n2)));
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("detection_probability_decomposition", 1e-10);
    for (int i = 0; i < std::max(4, options.corpus_size / 4); ++i) {
      const ProtocolConfig cfg{random_state(rng, 8), random_state(rng, 8), random_weak_bs(rng),
                               angle(rng), unit(rng) < 0.5 ? Detector::D1 : Detector::D2};
      rec.observe(detection_probabilities(cfg).total() - 1.0);
    }
    results.push_back(rec.finish());
  }

  {
    Recorder rec("exact_analytic_convergence_order", 0.2);
    const std::vector<double> r_values{0.1, 0.05, 0.025, 0.0125};
    const TruncationConfig trunc;
    const std::vector<SingleModeState> corpus{
        make_fock(1, trunc), make_fock(2, trunc), make_even_cat({Complex{1.0, 0.0}}, trunc),
        make_squeezed_vacuum({0.8, 0.0}, trunc)};
    for (const SingleModeState& psi : corpus) {
      std::vector<std::pair<double, double>> points;
      for (double r : r_values) {
        const ProtocolConfig cfg{psi, psi, BeamSplitterParams::from_reflectivity(r, 0.3), 0.7,
                                 Detector::D1};
        points.emplace_back(r, exact_analytic_infidelity(cfg));
      }
      rec.observe(log_log_slope(points) - 2.0);
    }
    results.push_back(rec.finish());
  }

  return results;
}

}  // namespace bse
