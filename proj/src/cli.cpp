#include "chronoscale/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chronoscale/corpus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"
#include "chronoscale/harness.hpp"
#include "chronoscale/report.hpp"

namespace chronoscale {

namespace {

/// A library error attributed to the command-line flag that produced it.
class FlagError : public Error {
 public:
  FlagError(const std::string& flag, const std::string& what) : Error(flag + ": " + what) {}
};

template <class Fn>
auto for_flag(const std::string& flag, Fn&& fn) {
  try {
    return fn();
  } catch (const FlagError&) {
    throw;
  } catch (const Error& e) {
    throw FlagError(flag, e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  for (char& c : key) {
    if (c == '-') {
      c = '_';
    }
  }
  return key;
}

std::string dashed(std::string key) {
  for (char& c : key) {
    if (c == '_') {
      c = '-';
    }
  }
  return key;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) {
      out.push_back(cur);
    }
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_real(text, what);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ConfigError(what + " must be an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

const std::map<std::string, std::string>& key_help() {
  static const std::map<std::string, std::string> help{
      {"quad_order", "Gauss-Legendre nodes per panel (default 16)"},
      {"panel_tol", "per-panel absolute quadrature tolerance (default 1e-11)"},
      {"max_depth", "maximum bisection depth (default 24)"},
      {"derivative_step_scale", "largest finite-difference step at right-dense points (default 0.05)"},
      {"supnorm_samples_per_segment", "sup-norm samples per dense segment (default 17)"},
      {"rel_floor", "relative quadrature acceptance floor (default 1e-12)"},
      {"tol_abs", "absolute inequality tolerance (default 1e-7)"},
      {"tol_rel", "relative inequality tolerance (default 1e-7)"},
      {"identity_tol_pure", "identity tolerance on pure-point rectangles (default 1e-12)"},
      {"identity_tol_dense", "identity tolerance when dense segments are involved (default 1e-7)"},
      {"anchor", "lower corner of P and Q: jump (sigma(a), sigma(c)) or endpoint (a, c); default jump"},
      {"threads", "campaign worker threads, 0 = automatic (default 0)"},
  };
  return help;
}

/// Tuning flags shared by every subcommand plus the --config file.
struct Tunables {
  CLI::App* app = nullptr;
  std::string config_path;
  std::map<std::string, std::string> flags;

  void attach(CLI::App* sub) {
    app = sub;
    sub->add_option("--config", config_path, "key=value file with tuning overrides (flags win over the file)");
    for (const auto& [key, help] : key_help()) {
      sub->add_option("--" + dashed(key), flags[key], help);
    }
  }

  /// Config file values overlaid by explicitly given flags.
  std::map<std::string, std::string> merged() const {
    std::map<std::string, std::string> values;
    if (!config_path.empty()) {
      values = for_flag("--config", [&] { return read_config_file(config_path); });
    }
    for (const auto& [key, value] : flags) {
      if (app->count("--" + dashed(key)) > 0) {
        values[key] = value;
      }
    }
    return values;
  }

  VerifyOptions options(int* threads = nullptr) const {
    const auto values = merged();
    VerifyOptions opts;
    for_flag("--config", [&] {
      apply_overrides(values, opts);
      opts.quad.validate();
      return 0;
    });
    if (threads != nullptr) {
      if (const auto it = values.find("threads"); it != values.end()) {
        *threads = for_flag("--threads", [&] { return parse_int(it->second, "threads"); });
      }
    }
    return opts;
  }
};

TimeScalePair read_pair(const std::string& ts1, const std::string& ts2) {
  TimeScale first = for_flag("--ts1", [&] { return parse_timescale(ts1); });
  TimeScale second = for_flag("--ts2", [&] { return parse_timescale(ts2); });
  return TimeScalePair{std::move(first), std::move(second)};
}

Rectangle read_rect(const TimeScalePair& pair, const std::string& text, const std::string& flag) {
  return for_flag(flag, [&] {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
      throw ConfigError("expected a,b,c,d, got '" + text + "'");
    }
    return make_rectangle(pair, parse_real(parts[0], "a"), parse_real(parts[1], "b"), parse_real(parts[2], "c"),
                          parse_real(parts[3], "d"));
  });
}

BivariateFunction read_function(const std::string& text, const std::string& flag) {
  return for_flag(flag, [&] { return resolve_function(text); });
}

void print_result(std::ostream& out, const InequalityResult& r) {
  out << "theorem     " << to_string(r.theorem) << "\n"
      << "timescale1  " << r.timescale1 << "\n"
      << "timescale2  " << r.timescale2 << "\n"
      << "rect        " << r.rect.descriptor() << "\n"
      << "f           " << r.f << "\n";
  if (!r.g.empty()) {
    out << "g           " << r.g << "\n";
  }
  out << "lhs         " << precise_real(r.lhs) << "\n"
      << "rhs         " << precise_real(r.rhs) << "\n"
      << "margin      " << precise_real(r.margin) << "\n"
      << "pass        " << (r.pass ? "true" : "false") << "\n";
  if (!r.notes.empty()) {
    out << "notes       " << r.notes << "\n";
  }
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << body)) {
    throw IoError("cannot write '" + path + "'");
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, help] : key_help()) {
      k.push_back(key);
    }
    return k;
  }();
  return keys;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  std::map<std::string, std::string> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    const auto& known = config_keys();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

void apply_overrides(const std::map<std::string, std::string>& values, VerifyOptions& opts) {
  for (const auto& [key, value] : values) {
    if (key == "quad_order") {
      opts.quad.quad_order = parse_int(value, key);
    } else if (key == "panel_tol") {
      opts.quad.panel_tol = parse_real(value, key);
    } else if (key == "max_depth") {
      opts.quad.max_depth = parse_int(value, key);
    } else if (key == "derivative_step_scale") {
      opts.quad.derivative_step_scale = parse_real(value, key);
    } else if (key == "supnorm_samples_per_segment") {
      opts.quad.supnorm_samples_per_segment = parse_int(value, key);
    } else if (key == "rel_floor") {
      opts.quad.rel_floor = parse_real(value, key);
    } else if (key == "tol_abs") {
      opts.tolerance.abs = parse_real(value, key);
    } else if (key == "tol_rel") {
      opts.tolerance.rel = parse_real(value, key);
    } else if (key == "identity_tol_pure") {
      opts.identity.pure_point = parse_real(value, key);
    } else if (key == "identity_tol_dense") {
      opts.identity.dense = parse_real(value, key);
    } else if (key == "anchor") {
      opts.anchor = parse_corner_anchor(value);
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-scale calculus engine and Ostrowski/trapezoid inequality verifier", "chronoscale"};
  app.set_version_flag("--version", artifact_version());
  app.require_subcommand(1, 1);

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run one identity or inequality check");
  Tunables verify_tune;
  std::string v_theorem, v_ts1, v_ts2, v_rect, v_f, v_g, v_out;
  verify_cmd->add_option("--theorem", v_theorem, "identity, thm21, thm22-stated, thm22-derived or thm31")
      ->required();
  verify_cmd->add_option("--ts1", v_ts1, "first time scale, e.g. R[0,1], Z[0,4], hZ[0,1;0.25]")->required();
  verify_cmd->add_option("--ts2", v_ts2, "second time scale")->required();
  verify_cmd->add_option("--rect", v_rect, "rectangle a,b,c,d")->required();
  verify_cmd->add_option("--f", v_f, "function f: expression in x, y or a corpus label")->required();
  verify_cmd->add_option("--g", v_g, "function g for thm21/thm22 (defaults to f)");
  verify_cmd->add_option("--out", v_out, "write the result as JSON to this path");
  verify_tune.attach(verify_cmd);

  // campaign
  CLI::App* campaign_cmd = app.add_subcommand("campaign", "Run a seeded randomized verification campaign");
  Tunables campaign_tune;
  int c_trials = 100;
  std::uint64_t c_seed = 1;
  std::string c_theorems = "thm21";
  std::string c_out, c_format = "json", c_functions, c_domain_ts1, c_domain_ts2, c_domain_rect;
  RandomTimeScaleParams c_params;
  campaign_cmd->add_option("--trials", c_trials, "number of trials (>= 1)")->capture_default_str();
  campaign_cmd->add_option("--seed", c_seed, "campaign seed")->capture_default_str();
  campaign_cmd->add_option("--theorems", c_theorems, "comma-separated theorem ids")->capture_default_str();
  campaign_cmd->add_option("--out", c_out, "report path")->required();
  campaign_cmd->add_option("--format", c_format, "json or csv")->capture_default_str();
  campaign_cmd->add_option("--functions", c_functions,
                           "comma-separated corpus labels or expressions (default: built-in corpus)");
  campaign_cmd->add_option("--max-segments", c_params.max_segments, "random time scales: most segments")
      ->capture_default_str();
  campaign_cmd->add_option("--span", c_params.span, "random time scales: total span")->capture_default_str();
  campaign_cmd->add_option("--min-gap", c_params.min_gap, "random time scales: least gap between segments")
      ->capture_default_str();
  campaign_cmd->add_option("--domain-ts1", c_domain_ts1, "pin every trial to this first time scale");
  campaign_cmd->add_option("--domain-ts2", c_domain_ts2, "pin every trial to this second time scale");
  campaign_cmd->add_option("--domain-rect", c_domain_rect, "pin every trial to this rectangle a,b,c,d");
  campaign_tune.attach(campaign_cmd);

  // counterexample
  CLI::App* search_cmd = app.add_subcommand("counterexample", "Search for a violation of one theorem");
  Tunables search_tune;
  std::string s_theorem, s_functions, s_out;
  int s_budget = 500;
  std::uint64_t s_seed = 1;
  search_cmd->add_option("--theorem", s_theorem, "theorem id")->required();
  search_cmd->add_option("--budget", s_budget, "maximum number of checks (>= 1)")->capture_default_str();
  search_cmd->add_option("--seed", s_seed, "search seed")->capture_default_str();
  search_cmd->add_option("--functions", s_functions, "comma-separated corpus labels or expressions");
  search_cmd->add_option("--out", s_out, "write the witness as JSON to this path");
  search_tune.attach(search_cmd);

  // integrate
  CLI::App* integrate_cmd = app.add_subcommand("integrate", "Print the delta double integral of f over a rectangle");
  Tunables integrate_tune;
  std::string i_ts1, i_ts2, i_rect, i_f;
  integrate_cmd->add_option("--ts1", i_ts1, "first time scale")->required();
  integrate_cmd->add_option("--ts2", i_ts2, "second time scale")->required();
  integrate_cmd->add_option("--rect", i_rect, "rectangle a,b,c,d")->required();
  integrate_cmd->add_option("--f", i_f, "integrand: expression in x, y or a corpus label")->required();
  integrate_tune.attach(integrate_cmd);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      const VerifyOptions opts = verify_tune.options();
      const TheoremId theorem = for_flag("--theorem", [&] { return parse_theorem_id(v_theorem); });
      const TimeScalePair pair = read_pair(v_ts1, v_ts2);
      const Rectangle rect = read_rect(pair, v_rect, "--rect");
      const BivariateFunction f = read_function(v_f, "--f");
      const BivariateFunction g = v_g.empty() ? f : read_function(v_g, "--g");
      const InequalityResult r = verify(theorem, f, g, pair, rect, opts);
      print_result(out, r);
      if (!v_out.empty()) {
        for_flag("--out", [&] {
          write_text(v_out, result_to_json(r) + "\n");
          return 0;
        });
      }
      return r.pass ? kExitOk : kExitViolation;
    }

    if (campaign_cmd->parsed()) {
      CampaignConfig cfg;
      cfg.options = campaign_tune.options(&cfg.threads);
      cfg.trials = c_trials;
      cfg.seed = c_seed;
      cfg.theorems.clear();
      for (const std::string& id : split(c_theorems, ',')) {
        cfg.theorems.push_back(for_flag("--theorems", [&] { return parse_theorem_id(id); }));
      }
      cfg.functions = split(c_functions, ',');
      cfg.timescale_params = c_params;
      const int pinned = !c_domain_ts1.empty() + !c_domain_ts2.empty() + !c_domain_rect.empty();
      if (pinned != 0 && pinned != 3) {
        throw FlagError("--domain-ts1/--domain-ts2/--domain-rect", "give all three or none");
      }
      if (pinned == 3) {
        const TimeScalePair pair = read_pair(c_domain_ts1, c_domain_ts2);
        const Rectangle rect = read_rect(pair, c_domain_rect, "--domain-rect");
        cfg.domain = FixedDomain{c_domain_ts1, c_domain_ts2, rect.a, rect.b, rect.c, rect.d};
      }
      const ReportFormat format = for_flag("--format", [&] { return parse_report_format(c_format); });
      for_flag("--functions", [&] {
        for (const std::string& fn : cfg.functions) {
          resolve_function(fn);
        }
        return 0;
      });
      for_flag("--trials", [&] {
        cfg.validate();
        return 0;
      });
      const VerificationReport report = run_campaign(cfg);
      for_flag("--out", [&] {
        emit_report(report, format, c_out);
        return 0;
      });
      const ReportSummary& s = report.summary;
      out << "records     " << s.records << "\n"
          << "passed      " << s.passed << "\n"
          << "failed      " << s.failed << "\n"
          << "worst       " << precise_real(s.worst_margin) << "\n"
          << "residual    " << precise_real(s.max_identity_residual) << "\n"
          << "report      " << c_out << "\n";
      return s.all_pass ? kExitOk : kExitViolation;
    }

    if (search_cmd->parsed()) {
      const VerifyOptions opts = search_tune.options();
      const TheoremId theorem = for_flag("--theorem", [&] { return parse_theorem_id(s_theorem); });
      const std::vector<std::string> functions = split(s_functions, ',');
      for_flag("--functions", [&] {
        for (const std::string& fn : functions) {
          resolve_function(fn);
        }
        return 0;
      });
      const CounterexampleSearch found =
          for_flag("--budget", [&] { return search_counterexample(theorem, s_budget, s_seed, opts, functions); });
      out << "evaluations " << found.evaluations << "\n";
      if (!found.witness) {
        out << "witness     none\n";
        if (found.best) {
          out << "closest     lhs " << precise_real(found.best->lhs) << " rhs " << precise_real(found.best->rhs)
              << "\n";
        }
        return kExitOk;
      }
      print_result(out, *found.witness);
      if (!s_out.empty()) {
        for_flag("--out", [&] {
          write_text(s_out, result_to_json(*found.witness) + "\n");
          return 0;
        });
      }
      return kExitViolation;
    }

    if (integrate_cmd->parsed()) {
      const VerifyOptions opts = integrate_tune.options();
      const TimeScalePair pair = read_pair(i_ts1, i_ts2);
      const Rectangle rect = read_rect(pair, i_rect, "--rect");
      const BivariateFunction f = read_function(i_f, "--f");
      out << precise_real(delta_integral_2d(pair, f.eval, rect, opts.quad)) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chronoscale
