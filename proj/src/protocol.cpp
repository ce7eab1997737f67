#include "bse/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bse {

namespace {

constexpr Complex kI{0.0, 1.0};

void validate_config(const ProtocolConfig& c) {
  if (!std::isfinite(c.gamma)) throw std::invalid_argument("ProtocolConfig: non-finite gamma");
  for (const SingleModeState* psi : {&c.psi1, &c.psi2}) {
    if (!psi->is_normalized() || std::abs(psi->squared_norm() - 1.0) > 1e-10)
      throw std::invalid_argument("ProtocolConfig: inputs must be normalized within 1e-10");
  }
}

Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double sqrt_binomial(int n, int k) {
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

ConditionalOutcome zero_outcome() {
  return ConditionalOutcome{BipartiteState(0, 0), 0.0, BipartiteState(0, 0)};
}

}  // namespace

ConditionalOutcome run_analytic(const ProtocolConfig& c) {
  validate_config(c);
  const WeakSplitResult w1 = weak_split(c.psi1, c.bs);
  const WeakSplitResult w2 = weak_split(c.psi2, c.bs);

  const Complex prefactor =
      std::polar(c.bs.reflectivity() / std::sqrt(2.0), c.bs.phi());
  const double sign = c.detector == Detector::D1 ? -1.0 : 1.0;
  const Complex branch2 = sign * kI * std::polar(1.0, c.gamma);

  BipartiteState state = BipartiteState::superposition(
      prefactor, tensor(w1.v, w2.u), prefactor * branch2, tensor(w1.u, w2.v));
  const double p = state.squared_norm();
  if (p <= 0.0) return zero_outcome();
  return ConditionalOutcome{state, p, state.normalized()};
}

ClickBranches exact_click_branches(const ProtocolConfig& c) {
  validate_config(c);
  const TwoModeState arm1 = apply_bs_exact(c.psi1, c.bs);
  const TwoModeState arm2 = apply_bs_exact(c.psi2, c.bs);
  const int k1_top = arm1.k_max();
  const int k2_top = arm2.k_max();

  ClickBranches out;
  int quiet = 0;
  for (int a = 1; a <= k1_top + k2_top; ++a) {
    // <a photons at the clicked detector, 0 at the other| in the weak basis:
    // conj. weight on |j, a-j>_c is 2^{-a/2} i^{j or a-j} e^{i(a-j)gamma}
    // sqrt(a choose j); the i-power sits on the clicked detector's own arm.
    BipartiteState branch(k1_top, k2_top);
    const double scale = std::exp(-0.5 * a * std::numbers::ln2);
    for (int j = std::max(0, a - k2_top); j <= std::min(a, k1_top); ++j) {
      const Complex weight = scale * sqrt_binomial(a, j) *
                             (c.detector == Detector::D1 ? i_pow(j) : i_pow(a - j)) *
                             std::polar(1.0, (a - j) * c.gamma);
      for (int m1 = 0; m1 <= k1_top - j; ++m1) {
        const Complex left = weight * arm1.amplitude(j, m1);
        if (left == Complex{0.0, 0.0}) continue;
        for (int m2 = 0; m2 <= k2_top - (a - j); ++m2) {
          const Complex add = left * arm2.amplitude(a - j, m2);
          if (add != Complex{0.0, 0.0}) branch.set(m1, m2, branch.amplitude(m1, m2) + add);
        }
      }
    }
    const double p = branch.squared_norm();
    out.branches.push_back(std::move(branch));
    out.probabilities.push_back(p);
    out.total_probability += p;

    quiet = (p < 1e-30 * std::max(out.total_probability, 1e-300)) ? quiet + 1 : 0;
    if (quiet >= 2) break;
  }
  return out;
}

ConditionalOutcome run_exact(const ProtocolConfig& c) {
  const ClickBranches br = exact_click_branches(c);
  if (br.total_probability <= 0.0) return zero_outcome();

  const std::size_t dominant = static_cast<std::size_t>(
      std::max_element(br.probabilities.begin(), br.probabilities.end()) -
      br.probabilities.begin());
  const BipartiteState& rep = br.branches[dominant];

  BipartiteState state(rep);
  state.scale(std::sqrt(br.total_probability / rep.squared_norm()));
  return ConditionalOutcome{state, br.total_probability, rep.normalized()};
}

double exact_analytic_infidelity(const ProtocolConfig& c) {
  const ClickBranches br = exact_click_branches(c);
  if (br.total_probability <= 0.0) return 0.0;
  const ConditionalOutcome analytic = run_analytic(c);
  if (analytic.success_probability <= 0.0) return 1.0;

  double overlap_mass = 0.0;
  for (const BipartiteState& branch : br.branches)
    overlap_mass += std::norm(inner_product(analytic.normalized_state, branch));
  return std::max(0.0, 1.0 - overlap_mass / br.total_probability);
}

DetectionProbabilities detection_probabilities(const ProtocolConfig& c) {
  validate_config(c);
  const TwoModeState arm1 = apply_bs_exact(c.psi1, c.bs);
  const TwoModeState arm2 = apply_bs_exact(c.psi2, c.bs);
  const int k1_top = arm1.k_max();
  const int k2_top = arm2.k_max();

  DetectionProbabilities out;
  out.no_click = arm1.weak_row_squared_norm(0) * arm2.weak_row_squared_norm(0);

  const Complex em_gamma = std::polar(1.0, -c.gamma);
  for (int s = 1; s <= k1_top + k2_top; ++s) {
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      // Monomial coefficients of (-i x + e^{-i gamma} y)^a (x - i e^{-i gamma} y)^b,
      // x tracking weak mode 1 and y weak mode 2.
      std::vector<Complex> poly(static_cast<std::size_t>(s) + 1, Complex{0.0, 0.0});
      for (int j1 = 0; j1 <= a; ++j1) {
        const Complex pa = binomial(a, j1) * i_pow(-j1) * std::pow(em_gamma, a - j1);
        for (int j2 = 0; j2 <= b; ++j2) {
          const Complex pb = binomial(b, j2) * std::pow(-kI * em_gamma, b - j2);
          poly[static_cast<std::size_t>(j1 + j2)] += pa * pb;
        }
      }
      // Fock amplitude of |a, b> at |j, s-j>_c.
      std::vector<Complex> coeffs(poly.size());
      const double log_ab = std::lgamma(a + 1.0) + std::lgamma(b + 1.0);
      for (int j = 0; j <= s; ++j)
        coeffs[static_cast<std::size_t>(j)] =
            poly[static_cast<std::size_t>(j)] *
            std::exp(0.5 * (std::lgamma(j + 1.0) + std::lgamma(s - j + 1.0) - log_ab) -
                     0.5 * s * std::numbers::ln2);

      double p_ab = 0.0;
      const int j_lo = std::max(0, s - k2_top);
      const int j_hi = std::min(s, k1_top);
      if (j_lo > j_hi) continue;
      for (int m1 = 0; m1 <= k1_top; ++m1) {
        for (int m2 = 0; m2 <= k2_top; ++m2) {
          Complex amp{0.0, 0.0};
          for (int j = j_lo; j <= j_hi; ++j)
            amp += std::conj(coeffs[static_cast<std::size_t>(j)]) * arm1.amplitude(j, m1) *
                   arm2.amplitude(s - j, m2);
          p_ab += std::norm(amp);
        }
      }

      if (a >= 1 && b == 0)
        out.d1 += p_ab;
      else if (a == 0)
        out.d2 += p_ab;
      else
        out.multi += p_ab;
    }
  }
  return out;
}

std::vector<std::pair<double, double>> success_probability_scaling(
    const ProtocolConfig& c, std::span<const double> r_values) {
  validate_config(c);
  std::vector<std::pair<double, double>> out;
  out.reserve(r_values.size());
  for (double r : r_values) {
    if (!(r > 0.0 && r < 1.0))
      throw std::domain_error("success_probability_scaling: R must lie in (0, 1)");
    ProtocolConfig point = c;
    point.bs = BeamSplitterParams::from_reflectivity(r, c.bs.phi());
    out.emplace_back(r, run_exact(point).success_probability);
  }
  return out;
}

}  // namespace bse
