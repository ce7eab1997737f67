#pragma once

#include <string>
#include <vector>

#include "bse/concurrence.hpp"
#include "bse/protocol.hpp"
#include "bse/states.hpp"

namespace bse {

enum class ExampleId { Fock, EvenCat, SqueezedVacuum, Hybrid };

const char* to_string(ExampleId id);

/// One named input scenario: Fock pair |n>,|m>; identical even cats;
/// identical squeezed vacua; or Fock |n> against an even cat.
struct ExampleSpec {
  ExampleId id = ExampleId::Fock;
  int n = 0;
  int m = 0;
  Complex alpha{0.0, 0.0};
  double r = 0.0;
  double theta = 0.0;
  double gamma = 0.0;
  Detector detector = Detector::D1;

  static ExampleSpec fock(int n, int m, double gamma, Detector d);
  static ExampleSpec even_cat(Complex alpha, double gamma, Detector d);
  static ExampleSpec squeezed_vacuum(double r, double theta, double gamma, Detector d);
  static ExampleSpec hybrid(int n, Complex alpha, double gamma, Detector d);
};

/// Thrown by expected_state when the scenario produces no click at all
/// (e.g. vacuum inputs), so there is no conditional state to construct.
class zero_probability_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The two input states of the scenario, in BS1/BS2 order.
std::pair<SingleModeState, SingleModeState> example_inputs(const ExampleSpec& e,
                                                           const TruncationConfig& trunc = {});

ProtocolConfig make_protocol_config(const ExampleSpec& e, const BeamSplitterParams& bs,
                                    const TruncationConfig& trunc = {});

/// Normalized closed-form conditional state of the scenario at transmission
/// t, built from the state constructors rather than the protocol pipeline.
BipartiteState expected_state(const ExampleSpec& e, double t, const TruncationConfig& trunc = {});

/// Closed-form concurrence of the scenario at transmission t:
/// 2 sqrt(nm)/(n+m) for Fock pairs, 1 for the identical cat and squeezed
/// cases, and the Fock/cat hybrid expression otherwise.
double expected_concurrence(const ExampleSpec& e, double t);

struct CheckTolerances {
  double analytic_fidelity = 1e-10;     // 1 - F of analytic vs closed form
  double concurrence_analytic = 1e-9;   // |C - C_expected|, analytic path
  double concurrence_exact = 1e-8;      // |C - C_expected|, exact path
  double exact_per_r_sq = 50.0;         // exact deviations allowed up to this * R^2
};

struct CheckEntry {
  std::string name;
  double value = 0.0;
  double bound = 0.0;  // entry passes when value <= bound
  bool pass = false;
};

struct ExampleReport {
  ExampleSpec spec;
  double transmission = 0.0;
  double reflectivity = 0.0;
  double success_probability = 0.0;
  double expected_concurrence = 0.0;
  bool zero_probability = false;
  std::vector<CheckEntry> entries;

  bool passed() const;
};

/// Run both protocol paths on the scenario and compare against the closed
/// forms. Failures become report entries, never exceptions.
ExampleReport check_example(const ExampleSpec& e, const BeamSplitterParams& bs,
                            const TruncationConfig& trunc = {}, const CheckTolerances& tol = {});

}  // namespace bse
