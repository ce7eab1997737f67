#include "bse/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace bse {

namespace {

// log cosh / log sinh without overflow for large arguments.
double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double log_sinh(double x) {
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

struct Term {
  int n;            // photon number
  double log_mag;   // ln |f_n|
  double phase;     // arg f_n
};

// Truncate a family of amplitude terms (sorted by n) to tail mass below
// epsilon_tail. `tail_ratio` must upper-bound w_{i+1}/w_i for the weights
// w_i = |f|^2 beyond the last generated term, so the remainder past the cap
// can be bounded geometrically. Tail sums run backwards, so they stay
// accurate well below machine epsilon of the total: no 1 - cumsum
// cancellation.
SingleModeState truncate_family(const std::vector<Term>& terms, double tail_ratio,
                                const TruncationConfig& trunc, const char* what) {
  trunc.validate();
  if (terms.empty()) throw std::domain_error(std::string(what) + ": no terms");

  std::vector<double> weights(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) weights[i] = std::exp(2.0 * terms[i].log_mag);

  double remainder = 0.0;
  if (tail_ratio >= 1.0)
    throw capacity_error(std::string(what) + ": amplitude tail does not decay within n_max_cap");
  remainder = weights.back() * tail_ratio / (1.0 - tail_ratio);

  // suffix[i] = mass strictly above term i
  std::vector<double> suffix(terms.size());
  double acc = remainder;
  for (std::size_t i = terms.size(); i-- > 0;) {
    suffix[i] = acc;
    acc += weights[i];
  }
  const double total = acc;

  std::size_t keep = terms.size();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (suffix[i] < trunc.epsilon_tail * total) {
      keep = i + 1;
      break;
    }
  }
  if (keep == terms.size() && suffix.back() >= trunc.epsilon_tail * total)
    throw capacity_error(std::string(what) + ": tail mass " + std::to_string(suffix.back()) +
                         " at n_max_cap exceeds epsilon_tail");

  double kept_mass = 0.0;
  for (std::size_t i = 0; i < keep; ++i) kept_mass += weights[i];
  const double scale = 1.0 / std::sqrt(kept_mass);

  std::vector<Complex> amps(static_cast<std::size_t>(terms[keep - 1].n) + 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < keep; ++i)
    amps[static_cast<std::size_t>(terms[i].n)] =
        std::polar(scale * std::exp(terms[i].log_mag), terms[i].phase);
  return SingleModeState(std::move(amps), true);
}

void require_finite_alpha(const Complex& alpha, const char* what) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::domain_error(std::string(what) + ": non-finite alpha");
}

}  // namespace

SingleModeState make_fock(int n, const TruncationConfig& trunc) {
  trunc.validate();
  if (n < 0 || n > trunc.n_max_cap)
    throw std::domain_error("make_fock: n = " + std::to_string(n) + " outside [0, " +
                            std::to_string(trunc.n_max_cap) + "]");
  std::vector<Complex> amps(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
  amps.back() = Complex{1.0, 0.0};
  return SingleModeState(std::move(amps), true);
}

SingleModeState make_coherent(const CoherentParams& p, const TruncationConfig& trunc) {
  trunc.validate();
  require_finite_alpha(p.alpha, "make_coherent");
  const double mag = std::abs(p.alpha);
  if (mag == 0.0) return make_fock(0, trunc);
  const double lambda = mag * mag;
  const double arg = std::arg(p.alpha);

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(trunc.n_max_cap) + 1);
  for (int n = 0; n <= trunc.n_max_cap; ++n)
    terms.push_back({n, -0.5 * lambda + n * std::log(mag) - 0.5 * std::lgamma(n + 1.0),
                     static_cast<double>(n) * arg});
  // Poisson weight ratio past the cap: lambda / (n + 1).
  const double ratio = lambda / (trunc.n_max_cap + 1.0);
  return truncate_family(terms, std::min(ratio, 2.0), trunc, "make_coherent");
}

SingleModeState make_even_cat(const CoherentParams& p, const TruncationConfig& trunc) {
  trunc.validate();
  require_finite_alpha(p.alpha, "make_even_cat");
  const double mag = std::abs(p.alpha);
  if (mag == 0.0) return make_fock(0, trunc);
  const double lambda = mag * mag;
  const double arg = std::arg(p.alpha);

  std::vector<Term> terms;
  for (int n = 0; 2 * n <= trunc.n_max_cap; ++n)
    terms.push_back({2 * n,
                     -0.5 * log_cosh(lambda) + 2.0 * n * std::log(mag) -
                         0.5 * std::lgamma(2.0 * n + 1.0),
                     2.0 * n * arg});
  const int top = terms.back().n;
  const double ratio = lambda * lambda / ((top + 1.0) * (top + 2.0));
  return truncate_family(terms, std::min(ratio, 2.0), trunc, "make_even_cat");
}

SingleModeState make_odd_cat(const CoherentParams& p, const TruncationConfig& trunc) {
  trunc.validate();
  require_finite_alpha(p.alpha, "make_odd_cat");
  const double mag = std::abs(p.alpha);
  if (mag == 0.0)
    throw std::domain_error("make_odd_cat: alpha = 0 has a divergent normalizer");
  const double lambda = mag * mag;
  const double arg = std::arg(p.alpha);

  std::vector<Term> terms;
  for (int n = 0; 2 * n + 1 <= trunc.n_max_cap; ++n)
    terms.push_back({2 * n + 1,
                     -0.5 * log_sinh(lambda) + (2.0 * n + 1.0) * std::log(mag) -
                         0.5 * std::lgamma(2.0 * n + 2.0),
                     (2.0 * n + 1.0) * arg});
  if (terms.empty()) throw capacity_error("make_odd_cat: n_max_cap below 1");
  const int top = terms.back().n;
  const double ratio = lambda * lambda / ((top + 1.0) * (top + 2.0));
  return truncate_family(terms, std::min(ratio, 2.0), trunc, "make_odd_cat");
}

SingleModeState make_squeezed_vacuum(const SqueezeParams& p, const TruncationConfig& trunc) {
  trunc.validate();
  if (!(p.r >= 0.0) || !std::isfinite(p.r))
    throw std::domain_error("make_squeezed_vacuum: r must be finite and >= 0");
  if (!std::isfinite(p.theta))
    throw std::domain_error("make_squeezed_vacuum: non-finite theta");
  if (p.r == 0.0) return make_fock(0, trunc);

  const double t = std::tanh(p.r);
  // (-Gamma)^n contributes phase n * (theta + pi) and magnitude t^n.
  std::vector<Term> terms;
  for (int n = 0; 2 * n <= trunc.n_max_cap; ++n)
    terms.push_back({2 * n,
                     -0.5 * log_cosh(p.r) + n * std::log(t) + 0.5 * std::lgamma(2.0 * n + 1.0) -
                         std::lgamma(n + 1.0) - n * std::numbers::ln2,
                     n * (p.theta + std::numbers::pi)});
  // weight ratio t^2 (2n+1)/(2n+2) < t^2
  return truncate_family(terms, t * t, trunc, "make_squeezed_vacuum");
}

}  // namespace bse
