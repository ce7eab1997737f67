#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bse/beam_splitter.hpp"
#include "bse/detector.hpp"
#include "bse/fock.hpp"

namespace bse {

/// Full entangler setup: both inputs, the shared BS1/BS2 splitter, the
/// wave-plate phase gamma on the second weak arm, and the detector whose
/// click is post-selected.
struct ProtocolConfig {
  SingleModeState psi1;
  SingleModeState psi2;
  BeamSplitterParams bs;
  double gamma = 0.0;
  Detector detector = Detector::D1;
};

/// Post-selected strong-mode state. `state` is unnormalized and its squared
/// norm equals success_probability; `normalized_state` is its direction
/// (the zero state, flagged unnormalized, when the probability vanishes).
struct ConditionalOutcome {
  BipartiteState state;
  double success_probability = 0.0;
  BipartiteState normalized_state;
};

/// Closed-form conditional state |v1>|u2> -+ i e^{i gamma} |u1>|v2> from the
/// one-photon weak-port expansion, scaled by e^{i phi} R / sqrt(2) so its
/// squared norm is the click probability at leading order.
ConditionalOutcome run_analytic(const ProtocolConfig& c);

/// Exact conditional analysis, no weak-port truncation. A click of the
/// chosen detector means >= 1 photon in its output mode of BS3 and none in
/// the other; branches[a-1] holds the strong-mode amplitudes accompanying
/// exactly a photons at the clicked detector. Branches with different a are
/// mutually orthogonal events, so total_probability is their plain sum.
struct ClickBranches {
  std::vector<BipartiteState> branches;
  std::vector<double> probabilities;
  double total_probability = 0.0;
};

ClickBranches exact_click_branches(const ProtocolConfig& c);

/// Exact protocol run. success_probability counts every click pattern of
/// the chosen detector (any photon number, other detector dark); `state`
/// points along the dominant branch, rescaled so its squared norm equals
/// success_probability.
ConditionalOutcome run_exact(const ProtocolConfig& c);

/// 1 - <analytic | rho_click | analytic> with rho_click the exact
/// strong-mode state conditioned on the click: the probability-weighted
/// fidelity of the exact outcome ensemble against the closed form.
/// Decays as R^2 for weak reflectivity. Zero when nothing clicks.
double exact_analytic_infidelity(const ProtocolConfig& c);

/// Exhaustive decomposition of one shot into the four detector events.
/// Cost grows like (n1_max + n2_max)^4; intended for moderate inputs.
struct DetectionProbabilities {
  double d1 = 0.0;        // D1 clicked, D2 dark
  double d2 = 0.0;        // D2 clicked, D1 dark
  double no_click = 0.0;  // both dark
  double multi = 0.0;     // both clicked
  double total() const { return d1 + d2 + no_click + multi; }
};

DetectionProbabilities detection_probabilities(const ProtocolConfig& c);

/// Exact success probability for each reflectivity in r_values, with phi and
/// everything else held fixed. Used to verify p(R) / R^2 -> const.
std::vector<std::pair<double, double>> success_probability_scaling(
    const ProtocolConfig& c, std::span<const double> r_values);

}  // namespace bse
