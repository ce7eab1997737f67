#include "bse/beam_splitter.hpp"

#include <cmath>
#include <numbers>

namespace bse {

BeamSplitterParams::BeamSplitterParams(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::domain_error("BeamSplitterParams: non-finite angle");
  if (theta < 0.0 || theta > std::numbers::pi)
    throw std::domain_error("BeamSplitterParams: theta must lie in [0, pi]");
}

BeamSplitterParams BeamSplitterParams::from_reflectivity(double r, double phi) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("BeamSplitterParams: reflectivity must lie in [0, 1]");
  return BeamSplitterParams(2.0 * std::asin(r), phi);
}

Complex bs_coefficient(int n, int k, const BeamSplitterParams& p) {
  if (k < 0 || n < 0 || k > n)
    throw std::domain_error("bs_coefficient: requires 0 <= k <= n");
  const double t = p.transmission();
  const double r = p.reflectivity();
  if (k > 0 && r == 0.0) return {0.0, 0.0};
  if (n - k > 0 && t == 0.0) return {0.0, 0.0};

  double log_mag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
  if (k > 0) log_mag += k * std::log(r);
  if (n - k > 0) log_mag += (n - k) * std::log(t);
  return std::polar(std::exp(log_mag), k * p.phi());
}

TwoModeState apply_bs_exact(const SingleModeState& input, const BeamSplitterParams& p) {
  const int n_top = input.n_max();
  TwoModeState out(n_top, n_top);
  for (int n = 0; n <= n_top; ++n) {
    const Complex fn = input.amplitude(n);
    if (fn == Complex{0.0, 0.0}) continue;
    for (int k = 0; k <= n; ++k) out.set(k, n - k, fn * bs_coefficient(n, k, p));
  }
  return out;
}

WeakSplitResult weak_split(const SingleModeState& input, const BeamSplitterParams& p) {
  const double t = p.transmission();
  const int n_top = input.n_max();

  std::vector<Complex> u(static_cast<std::size_t>(n_top) + 1);
  double t_pow = 1.0;
  for (int n = 0; n <= n_top; ++n) {
    u[static_cast<std::size_t>(n)] = input.amplitude(n) * t_pow;
    t_pow *= t;
  }

  std::vector<Complex> v(static_cast<std::size_t>(std::max(n_top - 1, 0)) + 1, Complex{0.0, 0.0});
  t_pow = 1.0;
  for (int n = 0; n + 1 <= n_top; ++n) {
    v[static_cast<std::size_t>(n)] =
        std::sqrt(static_cast<double>(n + 1)) * t_pow * input.amplitude(n + 1);
    t_pow *= t;
  }

  WeakSplitResult out{SingleModeState(std::move(u), false), SingleModeState(std::move(v), false),
                      0.0, 0.0};
  out.mu = out.u.norm();
  out.nu = out.v.norm();
  return out;
}

double truncation_residual(const SingleModeState& input, const BeamSplitterParams& p) {
  const TwoModeState out = apply_bs_exact(input, p);
  double mass = 0.0;
  for (int k = 2; k <= out.k_max(); ++k) mass += out.weak_row_squared_norm(k);
  return mass;
}

}  // namespace bse
