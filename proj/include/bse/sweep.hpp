#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bse/examples.hpp"

namespace bse {

/// Raised for malformed requests that should surface as usage errors.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepParameter { R, Gamma, Alpha, SqueezeR, FockN, TAlpha };
enum class SweepOutput { ConcurrenceAnalytic, ConcurrenceExact, SuccessProbability, Infidelity };

const char* to_string(SweepParameter p);
const char* to_string(SweepOutput o);
SweepParameter parse_sweep_parameter(const std::string& name);
SweepOutput parse_sweep_output(const std::string& name);

/// One parameter scan over a fixed example skeleton.
struct SweepSpec {
  SweepParameter parameter = SweepParameter::R;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  ExampleSpec base;
  BeamSplitterParams bs = BeamSplitterParams::from_reflectivity(0.05);
  TruncationConfig trunc;
  std::vector<SweepOutput> outputs;  // empty means all

  void validate() const;
};

/// One CSV row. Inapplicable parameter columns stay empty; outputs that were
/// not requested stay empty too, so every row of a sweep shares one schema.
struct RunRecord {
  std::string parameter;
  double value = 0.0;
  std::string example;
  std::string detector;
  double gamma = 0.0;
  double reflectivity = 0.0;
  double phi = 0.0;
  std::optional<double> n;
  std::optional<double> m;
  std::optional<double> alpha_re;
  std::optional<double> alpha_im;
  std::optional<double> squeeze_r;
  std::optional<double> squeeze_theta;
  std::optional<double> concurrence_analytic;
  std::optional<double> concurrence_exact;
  std::optional<double> success_probability;
  std::optional<double> infidelity;
};

inline constexpr const char* kSweepSchema = "bse.sweep.v1";

std::vector<RunRecord> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const std::vector<RunRecord>& records);

/// Static line plot of every populated output column against the swept value.
void write_svg_plot(std::ostream& os, const std::vector<RunRecord>& records,
                    const std::string& title);

/// Fixed-width lowercase hex-free "%.17g" rendering used for all CSV floats.
std::string format_double(double v);

}  // namespace bse
