#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracwave/chaos.hpp"
#include "fracwave/lemmas.hpp"
#include "fracwave/moments.hpp"
#include "fracwave/params.hpp"
#include "fracwave/regularity.hpp"
#include "fracwave/report.hpp"
#include "fracwave/rng.hpp"
#include "fracwave/spectral.hpp"

namespace fw = fracwave;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertificateFailure = 2;

struct Options {
  std::map<std::string, std::string> config;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

double get_d(const Options& o, const std::string& key, double dflt) {
  auto it = o.config.find(key);
  return it == o.config.end() ? dflt : std::stod(it->second);
}

std::string get_s(const Options& o, const std::string& key, const std::string& dflt) {
  auto it = o.config.find(key);
  return it == o.config.end() ? dflt : it->second;
}

std::vector<double> get_list(const Options& o, const std::string& key,
                             std::vector<double> dflt) {
  auto it = o.config.find(key);
  if (it == o.config.end()) return dflt;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

fw::ModelParams model_from(const Options& o) {
  fw::ModelParams p;
  p.kappa = get_d(o, "kappa", 2.0);
  p.hurst_space = get_d(o, "hurst_space", 0.3);
  p.hurst_time = get_d(o, "hurst_time", 0.5);
  const std::string kind = get_s(o, "temporal_kind", "white");
  p.temporal_kind = kind == "colored" ? fw::TemporalKind::Colored : fw::TemporalKind::White;
  return p;
}

fw::QuadratureSpec quad_from(const Options& o) {
  fw::QuadratureSpec q;
  q.tolerance = o.tol;
  q.frequency_cutoff = get_d(o, "frequency_cutoff", 1e4);
  q.tail_policy = get_s(o, "tail_policy", "power") == "envelope"
                      ? fw::TailPolicy::Envelope
                      : fw::TailPolicy::PowerExtrapolate;
  return q;
}

void write_report(const Options& o, const std::string& command, const fw::CsvTable& table,
                  bool all_passed, const std::string& verdict_line) {
  std::string path = o.out_path;
  if (path.empty()) {
    const char* dir = std::getenv("FRACWAVE_OUT_DIR");
    path = (std::filesystem::path(dir ? dir : ".") / (command + "." + o.format)).string();
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  if (o.format == "json") {
    json j;
    j["metadata"] = {{"artifact_version", fw::kArtifactVersion},
                     {"command", command},
                     {"seed", o.seed},
                     {"config", o.config}};
    j["columns"] = table.header;
    j["rows"] = json::array();
    for (const auto& row : table.rows) j["rows"].push_back(row);
    j["verdict"] = verdict_line;
    j["passed"] = all_passed;
    out << j.dump(2) << "\n";
  } else {
    out << table.to_string();
    out << "# verdict," << verdict_line << "\n";
  }
  std::cerr << "report written to " << path << "\n";
}

int cmd_validate(const Options& o) {
  fw::ValidatedParams vp = fw::validate_params(model_from(o));
  fw::CsvTable t;
  t.header = {"kappa", "hurst_space", "hurst_time", "temporal_kind", "regime",
              "growth", "p_factor", "holder_time_sup", "holder_space_sup",
              "chaos_series_power"};
  std::vector<std::string> row = {
      fw::format_g17(vp.params.kappa), fw::format_g17(vp.params.hurst_space),
      fw::format_g17(vp.params.hurst_time), fw::temporal_kind_name(vp.params.temporal_kind),
      fw::regime_name(vp.regime)};
  if (vp.solvable()) {
    fw::ExponentSet e = fw::exponents(vp);
    for (double v : {e.growth, e.p_factor, e.holder_time_sup, e.holder_space_sup,
                     e.chaos_series_power})
      row.push_back(fw::format_g17(v));
  } else {
    for (int i = 0; i < 5; ++i) row.push_back("nan");
  }
  t.rows.push_back(row);
  write_report(o, "validate", t, true, std::string("regime=") + fw::regime_name(vp.regime));
  return kExitOk;
}

int cmd_moments(const Options& o, bool lower) {
  fw::ValidatedParams vp = fw::validate_params(model_from(o));
  fw::QuadratureSpec q = quad_from(o);
  const int N = int(get_d(o, "max_order", 400));
  std::vector<double> horizons = get_list(o, "horizons", {2, 4, 8, 16});
  fw::CsvTable t;
  t.header = {"t", "log_partial_sum", "tail_bound", "orders_used", "tail_controlled"};
  std::vector<std::pair<double, double>> fitpts;
  for (double tt : horizons) {
    fw::MomentSeries s = lower ? fw::second_moment_lower(tt, vp, N, q)
                               : fw::second_moment_upper(tt, vp, N, q);
    fitpts.emplace_back(tt, s.log_partial_sum);
    t.rows.push_back({fw::format_g17(tt), fw::format_g17(s.log_partial_sum),
                      fw::format_g17(s.tail_bound), std::to_string(s.orders_used),
                      s.tail_controlled ? "1" : "0"});
  }
  fw::SlopeFit fit = fw::lyapunov_fit(fitpts);
  const double target = fw::exponents(vp).growth;
  const bool ok = std::abs(fit.slope - target) <= 0.1;
  t.rows.push_back({"fit_slope", fw::format_g17(fit.slope), fw::format_g17(target), "", ""});
  write_report(o, lower ? "lower" : "moments", t, ok,
               "slope=" + fw::format_g17(fit.slope) + " target=" + fw::format_g17(target) +
                   (ok ? " PASS" : " FAIL"));
  return ok ? kExitOk : kExitCertificateFailure;
}

int cmd_holder(const Options& o) {
  fw::ValidatedParams vp = fw::validate_params(model_from(o));
  fw::QuadratureSpec q = quad_from(o);
  std::vector<double> offsets =
      get_list(o, "offsets", {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256, 1.0 / 512});
  const double horizon = get_d(o, "horizon", 1.0);
  fw::CsvTable t;
  t.header = {"kind", "offset", "variance", "quadrature_error"};
  std::vector<fw::IncrementSample> ts, ss;
  for (double h : offsets) {
    ts.push_back(fw::time_increment_variance(horizon, h, vp, q));
    ss.push_back(fw::space_increment_variance(horizon, h, vp, q));
  }
  for (const auto& s : ts)
    t.rows.push_back({"time", fw::format_g17(s.offset), fw::format_g17(s.variance),
                      fw::format_g17(s.quadrature_error)});
  for (const auto& s : ss)
    t.rows.push_back({"space", fw::format_g17(s.offset), fw::format_g17(s.variance),
                      fw::format_g17(s.quadrature_error)});
  fw::HolderVerdict vt = fw::holder_verdict(ts, fw::IncrementKind::Time, vp);
  fw::HolderVerdict vs = fw::holder_verdict(ss, fw::IncrementKind::Space, vp);
  const bool ok = vt.consistent && vs.consistent;
  t.rows.push_back({"time_fit", fw::format_g17(vt.fit.slope), fw::format_g17(vt.supremum),
                    vt.consistent ? "Consistent" : "Inconsistent"});
  t.rows.push_back({"space_fit", fw::format_g17(vs.fit.slope), fw::format_g17(vs.supremum),
                    vs.consistent ? "Consistent" : "Inconsistent"});
  write_report(o, "holder", t, ok,
               std::string("time=") + (vt.consistent ? "Consistent" : "Inconsistent") +
                   " space=" + (vs.consistent ? "Consistent" : "Inconsistent"));
  return ok ? kExitOk : kExitCertificateFailure;
}

int cmd_threshold(const Options& o) {
  const double H = get_d(o, "hurst_space", 0.3);
  const double horizon = get_d(o, "horizon", 1.0);
  std::vector<double> kappas = get_list(
      o, "kappa_list", {3.0 - 4.0 * H - 0.2, 3.0 - 4.0 * H, 3.0 - 4.0 * H + 0.2, 2.0});
  std::vector<double> cutoffs = get_list(o, "cutoffs", {});
  fw::CsvTable t;
  t.header = {"kappa", "verdict", "expected", "increment_slope", "last_value"};
  bool ok = true;
  for (double k : kappas) {
    fw::DivergenceProbeResult r = fw::second_chaos_divergence_probe(k, H, horizon, cutoffs);
    const bool expect_div = k <= 3.0 - 4.0 * H;
    const bool got_div = r.verdict == fw::ProbeVerdict::Divergent;
    if (expect_div != got_div) ok = false;
    t.rows.push_back({fw::format_g17(k), got_div ? "Divergent" : "Convergent",
                      expect_div ? "Divergent" : "Convergent",
                      fw::format_g17(r.increment_slope),
                      fw::format_g17(r.values.back())});
  }
  write_report(o, "threshold", t, ok, ok ? "all verdicts match PASS" : "verdict mismatch FAIL");
  return ok ? kExitOk : kExitCertificateFailure;
}

int cmd_lemmas(const Options& o) {
  std::vector<fw::LemmaCertificate> suite = fw::lemma_certificate_suite(o.seed);
  fw::CsvTable t;
  t.header = {"lemma", "lhs", "rhs", "rel_error", "tolerance", "passed"};
  static const char* names[] = {"L1", "L2", "L3", "L5", "L6", "L7", "L8"};
  bool ok = true;
  for (const auto& c : suite) {
    ok = ok && c.passed;
    t.rows.push_back({names[int(c.lemma_id)], fw::format_g17(c.lhs), fw::format_g17(c.rhs),
                      fw::format_g17(c.rel_error), fw::format_g17(c.tolerance),
                      c.passed ? "1" : "0"});
  }
  write_report(o, "lemmas", t, ok, ok ? "all certificates passed" : "certificate failure");
  return ok ? kExitOk : kExitCertificateFailure;
}

int cmd_identity(const Options& o) {
  fw::QuadratureSpec q = quad_from(o);
  std::vector<double> rs = get_list(o, "r_values", {0.25, 0.5, 1.0, 2.0});
  std::vector<double> ss = get_list(o, "s_values", {0.25, 0.5, 1.0, 2.0});
  std::vector<double> hs = get_list(o, "h_values", {0.26, 0.3, 0.4, 0.49});
  fw::CsvTable t;
  t.header = {"r", "s", "H", "lhs", "rhs", "rel_error"};
  bool ok = true;
  for (double H : hs)
    for (double r : rs)
      for (double s : ss) {
        fw::IdentityCheck ic = fw::fbm_sine_identity(r, s, H, q);
        const double rel = std::abs(ic.lhs - ic.rhs) / std::abs(ic.rhs);
        if (!(rel < 1e-3) || !(ic.lhs > 0.0)) ok = false;
        t.rows.push_back({fw::format_g17(r), fw::format_g17(s), fw::format_g17(H),
                          fw::format_g17(ic.lhs), fw::format_g17(ic.rhs),
                          fw::format_g17(rel)});
      }
  write_report(o, "identity", t, ok, ok ? "identity holds on grid" : "identity failure");
  return ok ? kExitOk : kExitCertificateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numeric certificates for the fractional wave equation with rough noise"};
  app.require_subcommand(1);
  Options o;
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--out", o.out_path, "output report path");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", o.seed, "master seed for Monte Carlo commands");
  app.add_option("--tol", o.tol, "relative quadrature tolerance");
  for (const char* name :
       {"validate", "moments", "lower", "holder", "threshold", "lemmas", "identity"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) o.config = parse_config_file(config_path);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") return cmd_validate(o);
    if (cmd == "moments") return cmd_moments(o, false);
    if (cmd == "lower") return cmd_moments(o, true);
    if (cmd == "holder") return cmd_holder(o);
    if (cmd == "threshold") return cmd_threshold(o);
    if (cmd == "lemmas") return cmd_lemmas(o);
    if (cmd == "identity") return cmd_identity(o);
    std::cerr << "unknown command\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
