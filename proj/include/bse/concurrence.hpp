#pragma once

#include "bse/beam_splitter.hpp"
#include "bse/detector.hpp"
#include "bse/fock.hpp"

namespace bse {

/// Everything the closed-form concurrence of the conditional state needs:
/// the weak-split norms mu_j, nu_j, the normalized-basis overlaps
/// overlap_j = <V_j|U_j>, the wave-plate phase and the detector tag.
struct ConcurrenceInputs {
  double mu1 = 0.0;
  double nu1 = 0.0;
  double mu2 = 0.0;
  double nu2 = 0.0;
  Complex overlap1{0.0, 0.0};
  Complex overlap2{0.0, 0.0};
  double gamma = 0.0;
  Detector detector = Detector::D1;
};

/// Concurrence of nu1 mu2 |V1>|U2> -+ i e^{i gamma} mu1 nu2 |U1>|V2> in the
/// nonorthogonal normalized basis. Throws std::domain_error when the state
/// norm degenerates (e.g. both nu vanish) or the value leaves [0, 1] by more
/// than 1e-9, which indicates inconsistent inputs rather than noise.
double concurrence_general(const ConcurrenceInputs& in);

/// Identical-inputs reduction: C = (1 - s2) / (1 +/- sin(gamma) s2) with
/// s2 = |<V|U>|^2; '+' for D1, '-' for D2.
double concurrence_identical(double overlap_mag_sq, double gamma, Detector detector);

/// Basis-free check: sqrt(2 (1 - Tr rho1^2)) from the reduced density matrix
/// of the first mode. Input must be normalized to within 1e-8.
double concurrence_oracle(const BipartiteState& s);

/// Assemble ConcurrenceInputs from the two arms' weak splits.
ConcurrenceInputs concurrence_inputs(const WeakSplitResult& arm1, const WeakSplitResult& arm2,
                                     double gamma, Detector detector);

/// Residual x tanh(x) - n at x = t_alpha_mag^2. Zero at the point where the
/// Fock/even-cat hybrid output becomes maximally entangled.
double example4_mes_residual(int n, double t_alpha_mag);

/// The |T alpha| > 0 solving x tanh(x) = n, found by bisection.
double example4_mes_root(int n);

}  // namespace bse
