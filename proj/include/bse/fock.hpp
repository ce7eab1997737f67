#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace bse {

using Complex = std::complex<double>;

/// Thrown when a requested state cannot be truncated to the configured
/// tail mass within the configured photon-number cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncation policy: keep the smallest n_max whose neglected tail
/// probability mass is below epsilon_tail, never exceeding n_max_cap.
struct TruncationConfig {
  double epsilon_tail = 1e-12;
  int n_max_cap = 200;

  void validate() const {
    if (!(epsilon_tail > 0.0 && epsilon_tail < 1.0))
      throw std::domain_error("TruncationConfig: epsilon_tail must be in (0, 1)");
    if (n_max_cap < 1)
      throw std::domain_error("TruncationConfig: n_max_cap must be >= 1");
  }
};

/// One optical mode in the photon-number basis, amplitudes f_0 .. f_{n_max}.
/// States are immutable after construction. The `normalized` flag is part of
/// the value: intermediate results of the protocol are deliberately
/// unnormalized because their norm carries physical meaning.
class SingleModeState {
 public:
  SingleModeState(std::vector<Complex> amplitudes, bool normalized);

  /// All-zero amplitudes up to n_max, flagged unnormalized.
  static SingleModeState zero(int n_max);

  int n_max() const { return static_cast<int>(amps_.size()) - 1; }
  /// Amplitude at photon number n; zero outside the stored range.
  Complex amplitude(int n) const {
    return (n >= 0 && n < static_cast<int>(amps_.size())) ? amps_[static_cast<std::size_t>(n)]
                                                          : Complex{0.0, 0.0};
  }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  bool is_normalized() const { return normalized_; }

  double squared_norm() const;
  double norm() const;
  /// <n> = sum_n n |f_n|^2 / sum_n |f_n|^2. Throws on the zero state.
  double mean_photon_number() const;

 private:
  std::vector<Complex> amps_;
  bool normalized_;
};

/// Output of one beam splitter: amplitudes over |k>_weak (x) |m>_strong.
class TwoModeState {
 public:
  TwoModeState(int k_max, int m_max);

  int k_max() const { return k_max_; }
  int m_max() const { return m_max_; }
  Complex amplitude(int k, int m) const {
    return (k >= 0 && k <= k_max_ && m >= 0 && m <= m_max_)
               ? amps_[index(k, m)]
               : Complex{0.0, 0.0};
  }
  void set(int k, int m, Complex value);

  double squared_norm() const;
  /// sum_m |amplitude(k, m)|^2 for a fixed weak-port photon number k.
  double weak_row_squared_norm(int k) const;

 private:
  std::size_t index(int k, int m) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(m_max_ + 1) +
           static_cast<std::size_t>(m);
  }
  int k_max_;
  int m_max_;
  std::vector<Complex> amps_;
};

/// Joint state of the two strong output modes, amplitudes over |n1> (x) |n2>.
class BipartiteState {
 public:
  BipartiteState(int n1_max, int n2_max, bool normalized = false);

  /// c1 * s1 + c2 * s2, zero-padded to the common shape, flagged unnormalized.
  static BipartiteState superposition(Complex c1, const BipartiteState& s1, Complex c2,
                                      const BipartiteState& s2);

  int n1_max() const { return n1_max_; }
  int n2_max() const { return n2_max_; }
  Complex amplitude(int n1, int n2) const {
    return (n1 >= 0 && n1 <= n1_max_ && n2 >= 0 && n2 <= n2_max_)
               ? amps_[index(n1, n2)]
               : Complex{0.0, 0.0};
  }
  void set(int n1, int n2, Complex value);
  void scale(Complex factor);
  bool is_normalized() const { return normalized_; }

  double squared_norm() const;
  double norm() const;
  /// Unit-norm copy. Throws std::domain_error on the zero state.
  BipartiteState normalized() const;

 private:
  std::size_t index(int n1, int n2) const {
    return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2_max_ + 1) +
           static_cast<std::size_t>(n2);
  }
  int n1_max_;
  int n2_max_;
  bool normalized_;
  std::vector<Complex> amps_;
};

/// sum_n conj(a_n) b_n, the shorter state zero-padded.
Complex inner_product(const SingleModeState& a, const SingleModeState& b);
Complex inner_product(const BipartiteState& a, const BipartiteState& b);

/// Ladder-lowering: result amplitude at n is sqrt(n+1) f_{n+1}; unnormalized.
SingleModeState apply_annihilation(const SingleModeState& s);

/// Product state: amplitude(n1, n2) = a_{n1} b_{n2}.
BipartiteState tensor(const SingleModeState& a, const SingleModeState& b);

/// |<a|b>|^2 between the normalized directions of a and b.
/// Throws std::domain_error if either state has zero norm.
double fidelity(const BipartiteState& a, const BipartiteState& b);

}  // namespace bse
