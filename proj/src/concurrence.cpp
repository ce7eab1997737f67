#include "bse/concurrence.hpp"

#include <cmath>

namespace bse {

namespace {

double clamp_unit_interval(double c, const char* what) {
  if (c < -1e-9 || c > 1.0 + 1e-9)
    throw std::domain_error(std::string(what) + ": value " + std::to_string(c) +
                            " outside [0, 1] beyond tolerance; inputs are inconsistent");
  return std::min(std::max(c, 0.0), 1.0);
}

}  // namespace

double concurrence_general(const ConcurrenceInputs& in) {
  for (double x : {in.mu1, in.nu1, in.mu2, in.nu2}) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::domain_error("concurrence_general: mu/nu must be finite and >= 0");
  }
  const double o1 = std::abs(in.overlap1);
  const double o2 = std::abs(in.overlap2);
  if (o1 > 1.0 + 1e-12 || o2 > 1.0 + 1e-12)
    throw std::domain_error("concurrence_general: |<V|U>| exceeds 1");
  if (in.nu1 == 0.0 && in.nu2 == 0.0)
    throw std::domain_error(
        "concurrence_general: nu1 = nu2 = 0, no one-photon branch on either arm");

  const double cross = in.mu1 * in.nu1 * in.mu2 * in.nu2;
  const double diag = in.mu1 * in.mu1 * in.nu2 * in.nu2 + in.nu1 * in.nu1 * in.mu2 * in.mu2;
  // D1 carries the -i e^{i gamma} branch; its interference term is
  // -2 Im(e^{-i gamma} conj(<V1|U1>) <V2|U2>), D2 the opposite sign.
  const double im =
      std::imag(std::polar(1.0, -in.gamma) * std::conj(in.overlap1) * in.overlap2);
  const double denom = diag + (in.detector == Detector::D1 ? -2.0 : 2.0) * cross * im;
  if (denom <= 1e-300 || denom <= 1e-13 * diag)
    throw std::domain_error(
        "concurrence_general: squared norm of the conditional state vanishes "
        "(destructive interference of both branches)");

  const double num = 2.0 * cross *
                     std::sqrt(std::max(0.0, 1.0 - o1 * o1) * std::max(0.0, 1.0 - o2 * o2));
  return clamp_unit_interval(num / denom, "concurrence_general");
}

double concurrence_identical(double overlap_mag_sq, double gamma, Detector detector) {
  if (!(overlap_mag_sq >= 0.0 && overlap_mag_sq <= 1.0 + 1e-12))
    throw std::domain_error("concurrence_identical: |<V|U>|^2 must lie in [0, 1]");
  const double s2 = std::min(overlap_mag_sq, 1.0);
  const double denom =
      1.0 + (detector == Detector::D1 ? 1.0 : -1.0) * std::sin(gamma) * s2;
  if (denom <= 1e-12)
    throw std::domain_error(
        "concurrence_identical: denominator vanishes (destructive interference)");
  return clamp_unit_interval((1.0 - s2) / denom, "concurrence_identical");
}

double concurrence_oracle(const BipartiteState& s) {
  const double sq = s.squared_norm();
  if (std::abs(sq - 1.0) > 1e-8)
    throw std::domain_error("concurrence_oracle: state not normalized, squared norm " +
                            std::to_string(sq));

  // rho1(i,j) = sum_m A(i,m) conj(A(j,m)); Tr rho1^2 is its squared
  // Frobenius norm since rho1 is Hermitian.
  const int rows = s.n1_max() + 1;
  const int cols = s.n2_max() + 1;
  double trace_sq = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex rho_ij{0.0, 0.0};
      for (int m = 0; m < cols; ++m)
        rho_ij += s.amplitude(i, m) * std::conj(s.amplitude(j, m));
      trace_sq += (i == j ? 1.0 : 2.0) * std::norm(rho_ij);
    }
  }
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - trace_sq)));
}

ConcurrenceInputs concurrence_inputs(const WeakSplitResult& arm1, const WeakSplitResult& arm2,
                                     double gamma, Detector detector) {
  ConcurrenceInputs in;
  in.mu1 = arm1.mu;
  in.nu1 = arm1.nu;
  in.mu2 = arm2.mu;
  in.nu2 = arm2.nu;
  in.overlap1 = (arm1.nu > 0.0 && arm1.mu > 0.0)
                    ? inner_product(arm1.v, arm1.u) / (arm1.nu * arm1.mu)
                    : Complex{0.0, 0.0};
  in.overlap2 = (arm2.nu > 0.0 && arm2.mu > 0.0)
                    ? inner_product(arm2.v, arm2.u) / (arm2.nu * arm2.mu)
                    : Complex{0.0, 0.0};
  in.gamma = gamma;
  in.detector = detector;
  return in;
}

double example4_mes_residual(int n, double t_alpha_mag) {
  if (n < 1) throw std::domain_error("example4_mes_residual: n must be >= 1");
  if (!(t_alpha_mag >= 0.0) || !std::isfinite(t_alpha_mag))
    throw std::domain_error("example4_mes_residual: |T alpha| must be finite and >= 0");
  const double x = t_alpha_mag * t_alpha_mag;
  return x * std::tanh(x) - static_cast<double>(n);
}

double example4_mes_root(int n) {
  if (n < 1) throw std::domain_error("example4_mes_root: n must be >= 1");
  // x tanh x is strictly increasing, 0 at 0 and > n at x = n + 2.
  double lo = 0.0;
  double hi = static_cast<double>(n) + 2.0;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-16 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::tanh(mid) < static_cast<double>(n))
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

}  // namespace bse
