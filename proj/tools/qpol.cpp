// qpol: command-line front end for the polarization library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpol/channel.hpp"
#include "qpol/csv.hpp"
#include "qpol/degrees.hpp"
#include "qpol/qmeasures.hpp"
#include "qpol/report.hpp"
#include "qpol/sampling.hpp"
#include "qpol/states.hpp"
#include "qpol/unpolarized.hpp"
#include "qpol/verify.hpp"

namespace {

using nlohmann::ordered_json;
using qpol::format_number;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::string pd_normalization = "raw";
  std::string out;
  std::string format;  // empty: the command's natural format
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw InputError("cannot open output file " + g.out);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool wants_csv(const Globals& g, bool csv_by_default) {
  if (g.format.empty()) return csv_by_default;
  return g.format == "csv";
}

ordered_json state_json(const qpol::TwoModeState& state) { return ordered_json::parse(qpol::save_state(state)); }

// analyze -------------------------------------------------------------------

int cmd_analyze(const Globals& g, const std::string& path) {
  const qpol::AnyState state = qpol::load_state(read_file(path));
  qpol::ReportOptions options;
  options.pd_normalization = g.pd_normalization == "purity" ? qpol::PdNormalization::purity : qpol::PdNormalization::raw;
  const qpol::DegreeReport report = qpol::analyze(state, options);
  if (!wants_csv(g, false)) {
    emit(g, qpol::report_json(report) + "\n");
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "quantity,value\n";
  const std::vector<std::pair<const char*, double>> rows{
      {"P_S", report.p_s},   {"P_HSb", report.p_hsb}, {"P_Bb", report.p_bb}, {"P_Cb", report.p_cb},
      {"P_Q", report.p_q},   {"P_d", report.p_d},     {"P_p", report.p_p},   {"D_Q", report.d_q},
      {"mean_photon_number", report.mean_photon_number}};
  for (const auto& [name, value] : rows) csv << name << ',' << format_number(value) << '\n';
  emit(g, csv.str());
  return kExitOk;
}

// maxcurve ------------------------------------------------------------------

struct CurveArgs {
  std::string measure = "all";
  double from = 0.0;
  double to = 5.0;
  double step = 0.01;
};

int cmd_maxcurve(const Globals& g, const CurveArgs& a) {
  if (!(a.step > 0.0) || a.to < a.from || a.from < 0.0) throw InputError("need 0 <= from <= to and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((a.to - a.from) / a.step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = a.from + static_cast<double>(i) * a.step;

  const std::vector<std::string> all{"hsb", "bb", "cb", "q", "d", "p"};
  std::vector<std::string> measures;
  if (a.measure == "all") {
    measures = all;
  } else {
    measures.push_back(a.measure);
  }

  std::vector<qpol::MaxCurvePoint> points;
  for (const std::string& m : measures) {
    std::vector<qpol::MaxCurvePoint> curve;
    if (m == "hsb") curve = qpol::max_curve(qpol::DistanceMeasure::hs, grid);
    if (m == "bb") curve = qpol::max_curve(qpol::DistanceMeasure::bures, grid);
    if (m == "cb") curve = qpol::max_curve(qpol::DistanceMeasure::chernoff, grid);
    if (m == "q") curve = qpol::max_curve_q(grid);
    if (m == "d") curve = qpol::max_curve_d(grid);
    if (m == "p") curve = qpol::max_curve_p(grid);
    points.insert(points.end(), curve.begin(), curve.end());
  }

  if (wants_csv(g, true)) {
    std::ostringstream csv;
    qpol::write_curve_csv(csv, points);
    emit(g, csv.str());
  } else {
    ordered_json doc = ordered_json::array();
    for (const auto& p : points) doc.push_back({{"nbar", p.nbar}, {"measure", p.measure}, {"value", p.value}});
    emit(g, doc.dump(2) + "\n");
  }
  return kExitOk;
}

// unpolarized ---------------------------------------------------------------

struct GenArgs {
  int manifold = 2;
  double a = 0.0;
  double theta = 0.0;
  double a0 = 0.0;
  double a2 = 0.0;
  double theta1 = 0.0;
  std::string sign = "upper";
};

std::string variance_row(const qpol::TwoModeState& state, std::size_t index) {
  const auto cert = qpol::is_stokes_unpolarized(state);
  const int n = cert.n;
  const qpol::CVector c = state.manifold(n);
  const double a0 = std::abs(c(0));
  const double a2 = n >= 2 ? std::abs(c(2)) : 0.0;
  std::string region = "n/a";
  if (n == 3) {
    const auto zone = qpol::sail_region(a0, a2).zone;
    region = zone == qpol::SailZone::inside ? "inside" : zone == qpol::SailZone::on_border ? "border" : "outside";
  }
  return std::to_string(index) + ',' + std::to_string(n) + ',' + format_number(a0) + ',' + format_number(a2) + ',' +
         format_number(cert.variances[0]) + ',' + format_number(cert.variances[1]) + ',' +
         format_number(cert.variances[2]) + ',' + region + ',' + (cert.certified ? "true" : "false") + '\n';
}

const char* kVarianceHeader = "index,n,a0,a2,var_x,var_y,var_z,region,certified\n";

int emit_states(const Globals& g, const std::vector<qpol::TwoModeState>& states) {
  bool all_certified = true;
  for (const auto& s : states) all_certified = all_certified && qpol::is_stokes_unpolarized(s).certified;
  if (wants_csv(g, false)) {
    std::string csv = kVarianceHeader;
    for (std::size_t i = 0; i < states.size(); ++i) csv += variance_row(states[i], i);
    emit(g, csv);
  } else {
    ordered_json doc;
    doc["states"] = ordered_json::array();
    for (const auto& s : states) {
      const auto cert = qpol::is_stokes_unpolarized(s);
      doc["states"].push_back({{"state", state_json(s)},
                               {"certificate",
                                {{"sx", cert.sx},
                                 {"sy", cert.sy},
                                 {"sz", cert.sz},
                                 {"variances", {cert.variances[0], cert.variances[1], cert.variances[2]}},
                                 {"certified", cert.certified}}}});
    }
    emit(g, doc.dump(2) + "\n");
  }
  return all_certified ? kExitOk : kExitVerifyFailed;
}

int cmd_unpolarized_gen(const Globals& g, const GenArgs& a, const CLI::App& sub) {
  std::vector<qpol::TwoModeState> states;
  if (a.manifold == 2 && (sub.count("--a") > 0 || sub.count("--theta") > 0)) {
    states.push_back(qpol::two_photon_family(a.a, a.theta));
  } else if (a.manifold == 3) {
    if (sub.count("--a0") == 0 || sub.count("--a2") == 0) throw InputError("manifold 3 needs --a0 and --a2");
    states = qpol::three_photon_solve({a.a0, a.a2, a.theta1});
  } else {
    // Symmetric family with seeded random half amplitudes.
    qpol::Sampler rng(g.seed);
    if (a.manifold < 0) throw InputError("manifold must be non-negative");
    std::vector<qpol::Complex> half(static_cast<std::size_t>(a.manifold / 2) + 1);
    for (auto& c : half) c = qpol::Complex{rng.normal(), rng.normal()};
    states.push_back(qpol::symmetric_family(
        a.manifold, half, a.sign == "lower" ? qpol::FamilySign::lower : qpol::FamilySign::upper));
  }
  return emit_states(g, states);
}

int cmd_unpolarized_sail(const Globals& g, int samples) {
  if (samples < 2) throw InputError("--samples must be at least 2");
  const double a0_max = 1.0 / std::sqrt(2.0);
  struct Segment {
    const char* name;
    qpol::SailBorder border;
    double lo;
    double hi;
  };
  const Segment segments[] = {{"left", qpol::SailBorder::left, 0.0, 0.5},
                              {"right", qpol::SailBorder::right, 0.5, a0_max},
                              {"lower", qpol::SailBorder::lower, 0.0, a0_max}};
  if (wants_csv(g, true)) {
    std::string csv = "border,a0,a2\n";
    for (const Segment& s : segments) {
      for (int i = 0; i < samples; ++i) {
        const double a0 = s.lo + (s.hi - s.lo) * i / (samples - 1);
        csv += std::string(s.name) + ',' + format_number(a0) + ',' + format_number(qpol::sail_border(s.border, a0)) +
               '\n';
      }
    }
    emit(g, csv);
  } else {
    ordered_json doc;
    for (const Segment& s : segments) {
      ordered_json line = ordered_json::array();
      for (int i = 0; i < samples; ++i) {
        const double a0 = s.lo + (s.hi - s.lo) * i / (samples - 1);
        line.push_back({a0, qpol::sail_border(s.border, a0)});
      }
      doc[s.name] = std::move(line);
    }
    emit(g, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_unpolarized_variances(const Globals& g, int manifold, int samples) {
  if (samples < 1) throw InputError("--samples must be positive");
  if (manifold == 1 || manifold < 0) throw InputError("no unpolarized pure states in that manifold");
  qpol::Sampler rng(g.seed);
  std::vector<qpol::TwoModeState> states;
  for (int i = 0; i < samples; ++i) states.push_back(rng.unpolarized_pure(manifold));
  bool all_certified = true;
  std::string csv = kVarianceHeader;
  for (std::size_t i = 0; i < states.size(); ++i) {
    csv += variance_row(states[i], i);
    all_certified = all_certified && qpol::is_stokes_unpolarized(states[i]).certified;
  }
  if (wants_csv(g, true)) {
    emit(g, csv);
    return all_certified ? kExitOk : kExitVerifyFailed;
  }
  return emit_states(g, states);
}

// verify --------------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, int samples) {
  qpol::VerifyOptions options;
  options.samples = samples;
  options.seed = g.seed;
  const auto results = qpol::run_verify(suite, options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (g.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& r : results) {
      doc.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    emit(g, doc.dump(2) + "\n");
  } else if (g.format == "csv") {
    std::string csv = "suite,check,passed,detail\n";
    for (const auto& r : results) {
      csv += r.suite + ',' + r.name + ',' + (r.passed ? "true" : "false") + ',' + r.detail + '\n';
    }
    emit(g, csv);
  } else {
    std::string text;
    for (const auto& r : results) {
      text += std::string(r.passed ? "PASS " : "FAIL ") + r.suite + ": " + r.name + " (" + r.detail + ")\n";
    }
    text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " checks passed\n";
    emit(g, text);
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

// coherent ------------------------------------------------------------------

int cmd_coherent(const Globals& g, int cutoff, double theta, double phi) {
  if (cutoff < 0) throw InputError("--cutoff must be non-negative");
  emit(g, qpol::save_state(qpol::su2_coherent(cutoff, {theta, phi})) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum polarization degrees of two-mode fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--pd-normalization", g.pd_normalization, "Overlap normalization of P_d")
      ->check(CLI::IsMember({"raw", "purity"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Report every degree of a state file");
  analyze->add_option("file", analyze_path, "State JSON document")->required();

  CurveArgs curve;
  auto* maxcurve = app.add_subcommand("maxcurve", "Maximal degree versus mean photon number");
  maxcurve->add_option("--measure", curve.measure, "hsb, bb, cb, q, d, p or all")
      ->check(CLI::IsMember({"hsb", "bb", "cb", "q", "d", "p", "all"}))
      ->capture_default_str();
  maxcurve->add_option("--from", curve.from)->capture_default_str();
  maxcurve->add_option("--to", curve.to)->capture_default_str();
  maxcurve->add_option("--step", curve.step)->capture_default_str();

  auto* unpolarized = app.add_subcommand("unpolarized", "Stokes-unpolarized pure states");
  unpolarized->require_subcommand(1);
  GenArgs gen_args;
  auto* gen = unpolarized->add_subcommand("gen", "Generate and certify family members");
  gen->add_option("--manifold", gen_args.manifold)->capture_default_str();
  gen->add_option("--a", gen_args.a);
  gen->add_option("--theta", gen_args.theta);
  gen->add_option("--a0", gen_args.a0);
  gen->add_option("--a2", gen_args.a2);
  gen->add_option("--theta1", gen_args.theta1);
  gen->add_option("--sign", gen_args.sign)->check(CLI::IsMember({"upper", "lower"}))->capture_default_str();
  int sail_samples = 200;
  auto* sail = unpolarized->add_subcommand("sail", "Border curves of the three-photon region");
  sail->add_option("--samples", sail_samples)->capture_default_str();
  int variance_samples = 100;
  int variance_manifold = 3;
  auto* variances = unpolarized->add_subcommand("variances", "Variances of sampled unpolarized states");
  variances->add_option("--samples", variance_samples)->capture_default_str();
  variances->add_option("--manifold", variance_manifold)->capture_default_str();

  std::string suite = "all";
  int verify_samples = 20;
  auto* verify = app.add_subcommand("verify", "Run invariant and oracle suites");
  verify->add_option("suite", suite, "stokes, su2, channel, unpolarized, degrees, qmeasures or all")
      ->capture_default_str();
  verify->add_option("--samples", verify_samples)->capture_default_str();

  int coherent_cutoff = 1;
  double coherent_theta = 0.0;
  double coherent_phi = 0.0;
  auto* coherent = app.add_subcommand("coherent", "SU(2) coherent state as a state document");
  coherent->add_option("--cutoff", coherent_cutoff)->required();
  coherent->add_option("--theta", coherent_theta)->capture_default_str();
  coherent->add_option("--phi", coherent_phi)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(g, analyze_path);
    if (*maxcurve) return cmd_maxcurve(g, curve);
    if (*gen) return cmd_unpolarized_gen(g, gen_args, *gen);
    if (*sail) return cmd_unpolarized_sail(g, sail_samples);
    if (*variances) return cmd_unpolarized_variances(g, variance_manifold, variance_samples);
    if (*verify) return cmd_verify(g, suite, verify_samples);
    if (*coherent) return cmd_coherent(g, coherent_cutoff, coherent_theta, coherent_phi);
  } catch (const InputError& e) {
    std::cerr << "qpol: " << e.what() << '\n';
    return kExitInput;
  } catch (const qpol::Error& e) {
    std::cerr << "qpol: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
