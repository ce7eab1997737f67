#include "bse/fock.hpp"

#include <algorithm>
#include <cmath>

namespace bse {

namespace {

void require_finite(const std::vector<Complex>& amps, const char* what) {
  for (const Complex& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::domain_error(std::string(what) + ": non-finite amplitude");
  }
}

double squared_norm_of(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

SingleModeState::SingleModeState(std::vector<Complex> amplitudes, bool normalized)
    : amps_(std::move(amplitudes)), normalized_(normalized) {
  if (amps_.empty()) throw std::domain_error("SingleModeState: empty amplitude vector");
  require_finite(amps_, "SingleModeState");
  if (normalized_) {
    const double sq = squared_norm_of(amps_);
    if (std::abs(sq - 1.0) > 1e-8)
      throw std::domain_error("SingleModeState: normalized flag set but squared norm is " +
                              std::to_string(sq));
  }
}

SingleModeState SingleModeState::zero(int n_max) {
  if (n_max < 0) throw std::domain_error("SingleModeState::zero: n_max must be >= 0");
  return SingleModeState(std::vector<Complex>(static_cast<std::size_t>(n_max) + 1), false);
}

double SingleModeState::squared_norm() const { return squared_norm_of(amps_); }

double SingleModeState::norm() const { return std::sqrt(squared_norm()); }

double SingleModeState::mean_photon_number() const {
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < amps_.size(); ++n) {
    const double w = std::norm(amps_[n]);
    weighted += static_cast<double>(n) * w;
    total += w;
  }
  if (total <= 0.0) throw std::domain_error("mean_photon_number: zero state");
  return weighted / total;
}

TwoModeState::TwoModeState(int k_max, int m_max) : k_max_(k_max), m_max_(m_max) {
  if (k_max < 0 || m_max < 0) throw std::domain_error("TwoModeState: negative bounds");
  amps_.assign(static_cast<std::size_t>(k_max_ + 1) * static_cast<std::size_t>(m_max_ + 1),
               Complex{0.0, 0.0});
}

void TwoModeState::set(int k, int m, Complex value) {
  if (k < 0 || k > k_max_ || m < 0 || m > m_max_)
    throw std::out_of_range("TwoModeState::set: index out of range");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw std::domain_error("TwoModeState: non-finite amplitude");
  amps_[index(k, m)] = value;
}

double TwoModeState::squared_norm() const { return squared_norm_of(amps_); }

double TwoModeState::weak_row_squared_norm(int k) const {
  if (k < 0 || k > k_max_) return 0.0;
  double s = 0.0;
  for (int m = 0; m <= m_max_; ++m) s += std::norm(amps_[index(k, m)]);
  return s;
}

BipartiteState::BipartiteState(int n1_max, int n2_max, bool normalized)
    : n1_max_(n1_max), n2_max_(n2_max), normalized_(normalized) {
  if (n1_max < 0 || n2_max < 0) throw std::domain_error("BipartiteState: negative bounds");
  amps_.assign(static_cast<std::size_t>(n1_max_ + 1) * static_cast<std::size_t>(n2_max_ + 1),
               Complex{0.0, 0.0});
}

BipartiteState BipartiteState::superposition(Complex c1, const BipartiteState& s1, Complex c2,
                                             const BipartiteState& s2) {
  BipartiteState out(std::max(s1.n1_max(), s2.n1_max()), std::max(s1.n2_max(), s2.n2_max()));
  for (int i = 0; i <= out.n1_max(); ++i)
    for (int j = 0; j <= out.n2_max(); ++j)
      out.amps_[out.index(i, j)] = c1 * s1.amplitude(i, j) + c2 * s2.amplitude(i, j);
  return out;
}

void BipartiteState::set(int n1, int n2, Complex value) {
  if (n1 < 0 || n1 > n1_max_ || n2 < 0 || n2 > n2_max_)
    throw std::out_of_range("BipartiteState::set: index out of range");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw std::domain_error("BipartiteState: non-finite amplitude");
  amps_[index(n1, n2)] = value;
}

void BipartiteState::scale(Complex factor) {
  for (Complex& a : amps_) a *= factor;
  normalized_ = false;
}

double BipartiteState::squared_norm() const { return squared_norm_of(amps_); }

double BipartiteState::norm() const { return std::sqrt(squared_norm()); }

BipartiteState BipartiteState::normalized() const {
  const double n = norm();
  if (n <= 0.0) throw std::domain_error("BipartiteState::normalized: zero state");
  BipartiteState out(*this);
  for (Complex& a : out.amps_) a /= n;
  out.normalized_ = true;
  return out;
}

Complex inner_product(const SingleModeState& a, const SingleModeState& b) {
  const int n_top = std::min(a.n_max(), b.n_max());
  Complex acc{0.0, 0.0};
  for (int n = 0; n <= n_top; ++n) acc += std::conj(a.amplitude(n)) * b.amplitude(n);
  return acc;
}

Complex inner_product(const BipartiteState& a, const BipartiteState& b) {
  const int i_top = std::min(a.n1_max(), b.n1_max());
  const int j_top = std::min(a.n2_max(), b.n2_max());
  Complex acc{0.0, 0.0};
  for (int i = 0; i <= i_top; ++i)
    for (int j = 0; j <= j_top; ++j) acc += std::conj(a.amplitude(i, j)) * b.amplitude(i, j);
  return acc;
}

SingleModeState apply_annihilation(const SingleModeState& s) {
  const int out_top = std::max(s.n_max() - 1, 0);
  std::vector<Complex> out(static_cast<std::size_t>(out_top) + 1, Complex{0.0, 0.0});
  for (int n = 0; n + 1 <= s.n_max(); ++n)
    out[static_cast<std::size_t>(n)] = std::sqrt(static_cast<double>(n + 1)) * s.amplitude(n + 1);
  return SingleModeState(std::move(out), false);
}

BipartiteState tensor(const SingleModeState& a, const SingleModeState& b) {
  BipartiteState out(a.n_max(), b.n_max());
  for (int i = 0; i <= a.n_max(); ++i) {
    const Complex ai = a.amplitude(i);
    if (ai == Complex{0.0, 0.0}) continue;
    for (int j = 0; j <= b.n_max(); ++j) out.set(i, j, ai * b.amplitude(j));
  }
  return out;
}

double fidelity(const BipartiteState& a, const BipartiteState& b) {
  const double na = a.squared_norm();
  const double nb = b.squared_norm();
  if (na <= 0.0 || nb <= 0.0) throw std::domain_error("fidelity: zero state");
  return std::norm(inner_product(a, b)) / (na * nb);
}

}  // namespace bse
