#pragma once

#include "bse/fock.hpp"

namespace bse {

struct CoherentParams {
  Complex alpha{0.0, 0.0};
};

struct SqueezeParams {
  double r = 0.0;      // squeeze parameter, r >= 0
  double theta = 0.0;  // squeeze phase
};

/// |n>: amplitude 1 at photon number n. n must lie in [0, n_max_cap].
SingleModeState make_fock(int n, const TruncationConfig& trunc = {});

/// Coherent state, f_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!), truncated to
/// tail mass below epsilon_tail and renormalized.
SingleModeState make_coherent(const CoherentParams& p, const TruncationConfig& trunc = {});

/// Even cat: f_{2n} = (cosh|alpha|^2)^{-1/2} alpha^{2n} / sqrt((2n)!).
/// alpha = 0 degenerates to the vacuum and is allowed.
SingleModeState make_even_cat(const CoherentParams& p, const TruncationConfig& trunc = {});

/// Odd cat: f_{2n+1} = (sinh|alpha|^2)^{-1/2} alpha^{2n+1} / sqrt((2n+1)!).
/// alpha = 0 is a domain error (the normalizer diverges).
SingleModeState make_odd_cat(const CoherentParams& p, const TruncationConfig& trunc = {});

/// Squeezed vacuum: f_{2n} = (cosh r)^{-1/2} (-Gamma)^n sqrt((2n)!)/(n! 2^n)
/// with Gamma = exp(i theta) tanh r.
SingleModeState make_squeezed_vacuum(const SqueezeParams& p, const TruncationConfig& trunc = {});

}  // namespace bse
