#include "bse/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace bse {

namespace {

bool wants(const SweepSpec& spec, SweepOutput o) {
  if (spec.outputs.empty()) return true;
  return std::find(spec.outputs.begin(), spec.outputs.end(), o) != spec.outputs.end();
}

void apply_parameter(ExampleSpec& ex, BeamSplitterParams& bs, SweepParameter p, double v) {
  switch (p) {
    case SweepParameter::R:
      bs = BeamSplitterParams::from_reflectivity(v, bs.phi());
      return;
    case SweepParameter::Gamma:
      ex.gamma = v;
      return;
    case SweepParameter::Alpha:
      ex.alpha = Complex{v, 0.0};
      return;
    case SweepParameter::SqueezeR:
      ex.r = v;
      return;
    case SweepParameter::FockN:
      ex.n = static_cast<int>(std::llround(v));
      return;
    case SweepParameter::TAlpha:
      ex.alpha = Complex{v / bs.transmission(), 0.0};
      return;
  }
}

}  // namespace

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::R: return "R";
    case SweepParameter::Gamma: return "gamma";
    case SweepParameter::Alpha: return "alpha";
    case SweepParameter::SqueezeR: return "r";
    case SweepParameter::FockN: return "n";
    case SweepParameter::TAlpha: return "t_alpha";
  }
  return "?";
}

const char* to_string(SweepOutput o) {
  switch (o) {
    case SweepOutput::ConcurrenceAnalytic: return "concurrence_analytic";
    case SweepOutput::ConcurrenceExact: return "concurrence_exact";
    case SweepOutput::SuccessProbability: return "success_probability";
    case SweepOutput::Infidelity: return "infidelity";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(const std::string& name) {
  for (SweepParameter p : {SweepParameter::R, SweepParameter::Gamma, SweepParameter::Alpha,
                           SweepParameter::SqueezeR, SweepParameter::FockN, SweepParameter::TAlpha})
    if (name == to_string(p)) return p;
  throw usage_error("unknown sweep parameter '" + name + "'");
}

SweepOutput parse_sweep_output(const std::string& name) {
  for (SweepOutput o : {SweepOutput::ConcurrenceAnalytic, SweepOutput::ConcurrenceExact,
                        SweepOutput::SuccessProbability, SweepOutput::Infidelity})
    if (name == to_string(o)) return o;
  throw usage_error("unknown sweep output '" + name + "'");
}

void SweepSpec::validate() const {
  if (!(start < stop)) throw usage_error("sweep: start must be < stop");
  if (steps < 2) throw usage_error("sweep: steps must be >= 2");
  switch (parameter) {
    case SweepParameter::R:
      if (start <= 0.0 || stop >= 1.0) throw usage_error("sweep: R must stay inside (0, 1)");
      break;
    case SweepParameter::Alpha:
      if (base.id != ExampleId::EvenCat && base.id != ExampleId::Hybrid)
        throw usage_error("sweep: alpha applies to evencat and hybrid examples only");
      break;
    case SweepParameter::TAlpha:
      if (base.id != ExampleId::EvenCat && base.id != ExampleId::Hybrid)
        throw usage_error("sweep: t_alpha applies to evencat and hybrid examples only");
      break;
    case SweepParameter::SqueezeR:
      if (base.id != ExampleId::SqueezedVacuum)
        throw usage_error("sweep: r applies to the sv example only");
      if (start < 0.0) throw usage_error("sweep: r must be >= 0");
      break;
    case SweepParameter::FockN:
      if (base.id != ExampleId::Fock && base.id != ExampleId::Hybrid)
        throw usage_error("sweep: n applies to fock and hybrid examples only");
      if (start < 0.0) throw usage_error("sweep: n must be >= 0");
      break;
    case SweepParameter::Gamma:
      break;
  }
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<RunRecord> records;
  records.reserve(static_cast<std::size_t>(spec.steps));

  for (int i = 0; i < spec.steps; ++i) {
    const double v = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    ExampleSpec ex = spec.base;
    BeamSplitterParams bs = spec.bs;
    apply_parameter(ex, bs, spec.parameter, v);

    RunRecord rec;
    rec.parameter = to_string(spec.parameter);
    rec.value = spec.parameter == SweepParameter::FockN ? std::llround(v) : v;
    rec.example = to_string(ex.id);
    rec.detector = to_string(ex.detector);
    rec.gamma = ex.gamma;
    rec.reflectivity = bs.reflectivity();
    rec.phi = bs.phi();
    switch (ex.id) {
      case ExampleId::Fock:
        rec.n = ex.n;
        rec.m = ex.m;
        break;
      case ExampleId::EvenCat:
        rec.alpha_re = ex.alpha.real();
        rec.alpha_im = ex.alpha.imag();
        break;
      case ExampleId::SqueezedVacuum:
        rec.squeeze_r = ex.r;
        rec.squeeze_theta = ex.theta;
        break;
      case ExampleId::Hybrid:
        rec.n = ex.n;
        rec.alpha_re = ex.alpha.real();
        rec.alpha_im = ex.alpha.imag();
        break;
    }

    const ProtocolConfig cfg = make_protocol_config(ex, bs, spec.trunc);
    if (wants(spec, SweepOutput::ConcurrenceAnalytic)) {
      const ConditionalOutcome a = run_analytic(cfg);
      rec.concurrence_analytic =
          a.success_probability > 0.0 ? concurrence_oracle(a.normalized_state) : 0.0;
    }
    if (wants(spec, SweepOutput::ConcurrenceExact) || wants(spec, SweepOutput::SuccessProbability)) {
      const ConditionalOutcome x = run_exact(cfg);
      if (wants(spec, SweepOutput::ConcurrenceExact))
        rec.concurrence_exact =
            x.success_probability > 0.0 ? concurrence_oracle(x.normalized_state) : 0.0;
      if (wants(spec, SweepOutput::SuccessProbability))
        rec.success_probability = x.success_probability;
    }
    if (wants(spec, SweepOutput::Infidelity)) rec.infidelity = exact_analytic_infidelity(cfg);

    records.push_back(std::move(rec));
  }
  return records;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << "# schema=" << kSweepSchema << "\n";
  os << "parameter,value,example,detector,gamma,reflectivity,phi,n,m,alpha_re,alpha_im,"
        "squeeze_r,squeeze_theta,concurrence_analytic,concurrence_exact,success_probability,"
        "infidelity\n";
  for (const RunRecord& r : records) {
    os << r.parameter << ',' << format_double(r.value) << ',' << r.example << ',' << r.detector
       << ',' << format_double(r.gamma) << ',' << format_double(r.reflectivity) << ','
       << format_double(r.phi) << ',' << cell(r.n) << ',' << cell(r.m) << ',' << cell(r.alpha_re)
       << ',' << cell(r.alpha_im) << ',' << cell(r.squeeze_r) << ',' << cell(r.squeeze_theta)
       << ',' << cell(r.concurrence_analytic) << ',' << cell(r.concurrence_exact) << ','
       << cell(r.success_probability) << ',' << cell(r.infidelity) << "\n";
  }
}

void write_svg_plot(std::ostream& os, const std::vector<RunRecord>& records,
                    const std::string& title) {
  struct Series {
    const char* name;
    const char* color;
    std::vector<std::pair<double, double>> points;
  };
  Series series[] = {{"concurrence_analytic", "#1f77b4", {}},
                     {"concurrence_exact", "#d62728", {}},
                     {"success_probability", "#2ca02c", {}},
                     {"infidelity", "#9467bd", {}}};
  for (const RunRecord& r : records) {
    if (r.concurrence_analytic) series[0].points.emplace_back(r.value, *r.concurrence_analytic);
    if (r.concurrence_exact) series[1].points.emplace_back(r.value, *r.concurrence_exact);
    if (r.success_probability) series[2].points.emplace_back(r.value, *r.success_probability);
    if (r.infidelity) series[3].points.emplace_back(r.value, *r.infidelity);
  }

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  if (!(x_lo < x_hi)) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (!(y_lo < y_hi)) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double w = 840.0, h = 520.0, ml = 80.0, mr = 30.0, mt = 50.0, mb = 60.0;
  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (w - ml - mr); };
  auto py = [&](double y) { return h - mb - (y - y_lo) / (y_hi - y_lo) * (h - mt - mb); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << title
     << "</text>\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = x_lo + (x_hi - x_lo) * t / 5.0;
    const double yv = y_lo + (y_hi - y_lo) * t / 5.0;
    os << "<line x1=\"" << px(xv) << "\" y1=\"" << py(y_lo) << "\" x2=\"" << px(xv) << "\" y2=\""
       << py(y_hi) << "\" stroke=\"#dddddd\"/>\n";
    os << "<line x1=\"" << px(x_lo) << "\" y1=\"" << py(yv) << "\" x2=\"" << px(x_hi)
       << "\" y2=\"" << py(yv) << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << px(xv) << "\" y=\"" << h - mb + 20
       << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(xv) << "</text>\n";
    os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(yv) << "</text>\n";
  }
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr << "\" height=\""
     << h - mt - mb << "\" fill=\"none\" stroke=\"black\"/>\n";

  double legend_y = mt + 16.0;
  for (const Series& s : series) {
    if (s.points.empty()) continue;
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) os << px(x) << ',' << py(y) << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << ml + 12 << "\" y=\"" << legend_y << "\" font-size=\"12\" fill=\""
       << s.color << "\">" << s.name << "</text>\n";
    legend_y += 16.0;
  }
  os << "</svg>\n";
}

}  // namespace bse
