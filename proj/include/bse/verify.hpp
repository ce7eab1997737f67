#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bse/fock.hpp"

namespace bse {

/// Randomized invariant checks over a seeded corpus of states and settings.
struct VerifyOptions {
  int corpus_size = 24;
  std::uint64_t seed = 20240901;
  enum class Profile { Default, Strict } profile = Profile::Default;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  double worst = 0.0;      // largest observed deviation
  double tolerance = 0.0;  // pass iff worst <= tolerance
  bool pass = false;
};

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Random normalized state with n_max in [1, max_n]; when parity is 0 or 1
/// only that photon-number parity is populated.
SingleModeState random_state(std::mt19937_64& rng, int max_n, int parity = -1);

/// Least-squares slope of log(y) against log(x); the convergence-order fit.
double log_log_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace bse
