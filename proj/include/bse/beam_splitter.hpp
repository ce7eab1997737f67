#pragma once

#include "bse/fock.hpp"

namespace bse {

/// Lossless beam splitter with transmission T = cos(theta/2), reflectivity
/// R = sin(theta/2) and reflection phase phi. T and R are derived, never
/// stored, so |R|^2 + |T|^2 = 1 holds by construction.
class BeamSplitterParams {
 public:
  explicit BeamSplitterParams(double theta, double phi = 0.0);
  /// Convenience: choose theta from the amplitude reflectivity r in [0, 1].
  static BeamSplitterParams from_reflectivity(double r, double phi = 0.0);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double transmission() const { return std::cos(0.5 * theta_); }
  double reflectivity() const { return std::sin(0.5 * theta_); }

 private:
  double theta_;
  double phi_;
};

/// Above this reflectivity the weak-port expansion of the protocol is a poor
/// approximation; callers sweeping R should stay below it.
inline constexpr double kWeakReflectivityWarning = 0.2;

inline bool weak_regime(const BeamSplitterParams& p,
                        double threshold = kWeakReflectivityWarning) {
  return p.reflectivity() <= threshold;
}

/// Fock matrix element c_k^n = sqrt(n choose k) e^{ik phi} R^k T^{n-k}:
/// the amplitude for k of n input photons to exit through the weak port.
/// Requires 0 <= k <= n. Evaluated in log space so large n stay finite.
Complex bs_coefficient(int n, int k, const BeamSplitterParams& p);

/// Full unitary action on |0, psi>: output amplitude at (k, n-k) is
/// f_n c_k^n. Weak-port photon number k indexes rows, strong-port m columns.
TwoModeState apply_bs_exact(const SingleModeState& input, const BeamSplitterParams& p);

/// The weak-port expansion kept to one photon: u_n = f_n T^n and
/// v_n = sqrt(n+1) T^n f_{n+1}, both unnormalized, with their norms mu, nu.
/// The e^{i phi} R prefactor of the one-photon branch is *not* folded into v.
struct WeakSplitResult {
  SingleModeState u;
  SingleModeState v;
  double mu = 0.0;
  double nu = 0.0;
};

WeakSplitResult weak_split(const SingleModeState& input, const BeamSplitterParams& p);

/// Probability mass of the neglected branches: squared norm of the exact
/// output restricted to weak-port photon number >= 2.
double truncation_residual(const SingleModeState& input, const BeamSplitterParams& p);

}  // namespace bse
