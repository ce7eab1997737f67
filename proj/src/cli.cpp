#include "bse/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "bse/sweep.hpp"
#include "bse/verify.hpp"

namespace bse::cli {

namespace {

std::optional<double> parse_plain_double(const std::string& s) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  double value = 0.0;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec == std::errc() && res.ptr == end) return value;
  return std::nullopt;
}

struct GlobalFlags {
  double reflectivity = 0.05;
  std::string phi = "0";
  std::string gamma = "0";
  std::string detector = "D1";
  double epsilon_tail = 1e-12;
  int n_max_cap = 200;
  std::string out;
  bool svg = false;
  std::uint64_t seed = 20240901;
};

struct ExampleFlags {
  std::string id;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> alpha;
  std::optional<double> t_alpha;
  std::optional<double> squeeze_r;
  std::string theta = "0";
};

Detector parse_detector(const std::string& d) {
  if (d == "D1") return Detector::D1;
  if (d == "D2") return Detector::D2;
  throw usage_error("detector must be D1 or D2");
}

ExampleId parse_example_id(const std::string& id) {
  for (ExampleId e :
       {ExampleId::Fock, ExampleId::EvenCat, ExampleId::SqueezedVacuum, ExampleId::Hybrid})
    if (id == to_string(e)) return e;
  throw usage_error("unknown example '" + id + "' (expected fock, evencat, sv or hybrid)");
}

// Builds the scenario from flags; `swept` marks the parameter a sweep will
// fill in, so it is exempt from the required-flag checks.
ExampleSpec build_example(const ExampleFlags& ex, const GlobalFlags& g, double transmission,
                          const std::string& swept = "") {
  ExampleSpec spec;
  spec.id = parse_example_id(ex.id);
  spec.gamma = parse_angle(g.gamma);
  spec.detector = parse_detector(g.detector);

  auto require = [&](bool present, const char* flag) {
    if (!present) throw usage_error("example " + ex.id + " requires " + flag);
  };
  switch (spec.id) {
    case ExampleId::Fock:
      require(ex.n.has_value() || swept == "n", "--n");
      require(ex.m.has_value(), "--m");
      spec.n = ex.n.value_or(1);
      spec.m = *ex.m;
      break;
    case ExampleId::EvenCat:
      require(ex.alpha.has_value() || swept == "alpha" || swept == "t_alpha", "--alpha");
      spec.alpha = Complex{ex.alpha.value_or(1.0), 0.0};
      break;
    case ExampleId::SqueezedVacuum:
      require(ex.squeeze_r.has_value() || swept == "r", "--r");
      spec.r = ex.squeeze_r.value_or(0.5);
      spec.theta = parse_angle(ex.theta);
      break;
    case ExampleId::Hybrid: {
      require(ex.n.has_value() || swept == "n", "--n");
      spec.n = ex.n.value_or(1);
      const bool swept_alpha = swept == "alpha" || swept == "t_alpha";
      if (ex.alpha && ex.t_alpha)
        throw usage_error("example hybrid takes --alpha or --t-alpha, not both");
      if (!swept_alpha) require(ex.alpha.has_value() || ex.t_alpha.has_value(), "--t-alpha");
      if (ex.t_alpha)
        spec.alpha = Complex{*ex.t_alpha / transmission, 0.0};
      else
        spec.alpha = Complex{ex.alpha.value_or(1.0), 0.0};
      break;
    }
  }
  return spec;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream ofs(path);
  if (!ofs) throw io_error("cannot open '" + path + "' for writing");
  return ofs;
}

void finish_output(std::ofstream& ofs, const std::string& path) {
  ofs.flush();
  if (!ofs.good()) throw io_error("write to '" + path + "' failed");
}

void warn_strong_reflectivity(const BeamSplitterParams& bs) {
  if (!weak_regime(bs))
    std::cerr << "warning: R = " << format_double(bs.reflectivity())
              << " is above the weak-splitting regime (<= "
              << format_double(kWeakReflectivityWarning) << ")\n";
}

int cmd_example(const ExampleFlags& ex, const GlobalFlags& g) {
  const BeamSplitterParams bs =
      BeamSplitterParams::from_reflectivity(g.reflectivity, parse_angle(g.phi));
  warn_strong_reflectivity(bs);
  const TruncationConfig trunc{g.epsilon_tail, g.n_max_cap};
  const ExampleSpec spec = build_example(ex, g, bs.transmission());

  const ExampleReport report = check_example(spec, bs, trunc);

  std::cout << "example " << to_string(spec.id) << "  detector=" << to_string(spec.detector)
            << "  gamma=" << format_double(spec.gamma)
            << "  R=" << format_double(bs.reflectivity()) << "  phi=" << format_double(bs.phi())
            << "\n";
  if (report.zero_probability) {
    std::cout << "  zero-probability scenario (no photon can reach the detectors)\n";
  } else {
    std::cout << "  expected_concurrence=" << format_double(report.expected_concurrence)
              << "  success_probability=" << format_double(report.success_probability) << "\n";
  }
  for (const CheckEntry& entry : report.entries)
    std::cout << "  [" << (entry.pass ? "PASS" : "FAIL") << "] " << entry.name << " = "
              << format_double(entry.value) << " (bound " << format_double(entry.bound) << ")\n";
  std::cout << "RESULT: " << (report.passed() ? "PASS" : "FAIL") << "\n";

  if (!g.out.empty()) {
    std::ofstream ofs = open_output(g.out);
    ofs << "# schema=bse.example.v1\n";
    ofs << "example,detector,gamma,reflectivity,phi,expected_concurrence,success_probability,"
           "zero_probability,passed\n";
    ofs << to_string(spec.id) << ',' << to_string(spec.detector) << ','
        << format_double(spec.gamma) << ',' << format_double(bs.reflectivity()) << ','
        << format_double(bs.phi()) << ','
        << (report.zero_probability ? "" : format_double(report.expected_concurrence)) << ','
        << format_double(report.success_probability) << ','
        << (report.zero_probability ? 1 : 0) << ',' << (report.passed() ? 1 : 0) << "\n";
    finish_output(ofs, g.out);
  }
  return report.passed() ? 0 : 1;
}

struct SweepFlags {
  std::string parameter;
  std::string start;
  std::string stop;
  int steps = 0;
  std::vector<std::string> outputs;
};

int cmd_sweep(const SweepFlags& sw, const ExampleFlags& ex, const GlobalFlags& g) {
  if (g.out.empty()) throw usage_error("sweep requires --out PATH");

  SweepSpec spec;
  spec.parameter = parse_sweep_parameter(sw.parameter);
  spec.start = parse_angle(sw.start);
  spec.stop = parse_angle(sw.stop);
  spec.steps = sw.steps;
  spec.bs = BeamSplitterParams::from_reflectivity(g.reflectivity, parse_angle(g.phi));
  if (spec.parameter != SweepParameter::R) warn_strong_reflectivity(spec.bs);
  spec.trunc = TruncationConfig{g.epsilon_tail, g.n_max_cap};
  spec.base = build_example(ex, g, spec.bs.transmission(), sw.parameter);
  for (const std::string& name : sw.outputs) spec.outputs.push_back(parse_sweep_output(name));

  const std::vector<RunRecord> records = run_sweep(spec);

  std::ofstream ofs = open_output(g.out);
  write_csv(ofs, records);
  finish_output(ofs, g.out);
  std::cout << "wrote " << records.size() << " rows to " << g.out << "\n";

  if (g.svg) {
    const std::string svg_path =
        std::filesystem::path(g.out).replace_extension(".svg").string();
    std::ofstream svg = open_output(svg_path);
    write_svg_plot(svg, records,
                   std::string(to_string(spec.base.id)) + " vs " + sw.parameter);
    finish_output(svg, svg_path);
    std::cout << "wrote plot to " << svg_path << "\n";
  }
  return 0;
}

int cmd_verify(int corpus_size, const std::string& profile, const GlobalFlags& g) {
  VerifyOptions options;
  options.corpus_size = corpus_size;
  options.seed = g.seed;
  if (profile == "strict")
    options.profile = VerifyOptions::Profile::Strict;
  else if (profile != "default")
    throw usage_error("tolerance profile must be 'default' or 'strict'");

  const std::vector<SuiteResult> results = run_verification(options);
  std::cout << "verification seed=" << g.seed << " corpus=" << corpus_size << " profile="
            << profile << "\n";
  int failures = 0;
  for (const SuiteResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-42s %6d cases  worst %-12s tol %-10s %s",
                  r.name.c_str(), r.cases, format_double(r.worst).c_str(),
                  format_double(r.tolerance).c_str(), r.pass ? "PASS" : "FAIL");
    std::cout << line << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << "VERIFY: " << (failures == 0 ? "PASS" : "FAIL") << " ("
            << results.size() - failures << "/" << results.size() << " suites)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw usage_error("empty angle");

  if (const auto plain = parse_plain_double(s)) return *plain;

  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos || pos + 2 > s.size())
    throw usage_error("cannot parse angle '" + text + "'");

  double coefficient = 1.0;
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (head == "-")
    coefficient = -1.0;
  else if (!head.empty() && head != "+") {
    const auto parsed = parse_plain_double(head);
    if (!parsed) throw usage_error("cannot parse angle '" + text + "'");
    coefficient = *parsed;
  }

  double denominator = 1.0;
  const std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw usage_error("cannot parse angle '" + text + "'");
    const auto parsed = parse_plain_double(tail.substr(1));
    if (!parsed || *parsed == 0.0) throw usage_error("cannot parse angle '" + text + "'");
    denominator = *parsed;
  }
  return coefficient * std::numbers::pi / denominator;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"beam-splitter entangler: conditional entanglement of two light fields"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--R", g.reflectivity, "amplitude reflectivity of BS1/BS2")
      ->capture_default_str();
  app.add_option("--phi", g.phi, "reflection phase of BS1/BS2 (accepts e.g. pi/2)")
      ->capture_default_str();
  app.add_option("--gamma", g.gamma, "wave-plate phase (accepts e.g. 3pi/2)")
      ->capture_default_str();
  app.add_option("--detector", g.detector, "post-selected detector")
      ->check(CLI::IsMember({"D1", "D2"}))
      ->capture_default_str();
  app.add_option("--epsilon-tail", g.epsilon_tail, "truncation tail mass")
      ->capture_default_str();
  app.add_option("--n-max-cap", g.n_max_cap, "hard photon-number cap")->capture_default_str();
  app.add_option("--out", g.out, "output path (CSV)");
  app.add_flag("--svg", g.svg, "also write an SVG plot next to --out (sweep only)");
  app.add_option("--seed", g.seed, "seed for randomized verification")->capture_default_str();

  ExampleFlags ex;
  auto add_example_options = [&ex](CLI::App* cmd) {
    cmd->add_option("id", ex.id, "fock | evencat | sv | hybrid")->required();
    cmd->add_option("--n", ex.n, "photon number of the first input");
    cmd->add_option("--m", ex.m, "photon number of the second input");
    cmd->add_option("--alpha", ex.alpha, "cat amplitude");
    cmd->add_option("--t-alpha", ex.t_alpha, "cat amplitude after transmission, T*alpha");
    cmd->add_option("--r", ex.squeeze_r, "squeeze parameter");
    cmd->add_option("--theta", ex.theta, "squeeze phase (accepts e.g. pi/2)");
  };

  CLI::App* example_cmd =
      app.add_subcommand("example", "run one named scenario and check its closed forms");
  example_cmd->fallthrough();
  add_example_options(example_cmd);

  SweepFlags sw;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan one parameter and emit CSV");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--parameter", sw.parameter, "R | gamma | alpha | r | n | t_alpha")
      ->required();
  sweep_cmd->add_option("--start", sw.start, "range start (accepts e.g. pi/4)")->required();
  sweep_cmd->add_option("--stop", sw.stop, "range stop")->required();
  sweep_cmd->add_option("--steps", sw.steps, "number of grid points")->required();
  sweep_cmd->add_option("--example", ex.id, "fock | evencat | sv | hybrid")->required();
  sweep_cmd->add_option("--n", ex.n, "photon number of the first input");
  sweep_cmd->add_option("--m", ex.m, "photon number of the second input");
  sweep_cmd->add_option("--alpha", ex.alpha, "cat amplitude");
  sweep_cmd->add_option("--t-alpha", ex.t_alpha, "cat amplitude after transmission");
  sweep_cmd->add_option("--r", ex.squeeze_r, "squeeze parameter");
  sweep_cmd->add_option("--theta", ex.theta, "squeeze phase");
  sweep_cmd
      ->add_option("--outputs", sw.outputs,
                   "concurrence_analytic, concurrence_exact, success_probability, infidelity")
      ->delimiter(',');

  int corpus_size = 24;
  std::string profile = "default";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the randomized invariant suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--corpus-size", corpus_size, "states per suite")
      ->capture_default_str();
  verify_cmd->add_option("--tolerance-profile", profile, "default | strict")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (example_cmd->parsed()) return cmd_example(ex, g);
    if (sweep_cmd->parsed()) return cmd_sweep(sw, ex, g);
    return cmd_verify(corpus_size, profile, g);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bse::cli
