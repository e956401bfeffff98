#include "chronoscale/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include "chronoscale/corpus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"

#ifndef CHRONOSCALE_VERSION
#define CHRONOSCALE_VERSION "0.0.0"
#endif

namespace chronoscale {

namespace {

constexpr int kDrawRetries = 8;
constexpr int kDenseCandidates = 3;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index + 1)); }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

TimeScale draw_timescale(std::mt19937_64& rng, const RandomTimeScaleParams& params) {
  switch (below(rng, 7)) {
    case 0:
    case 1:
    case 2:
      return random_timescale(rng(), params);
    case 3: {
      const double lo = 0.5 * static_cast<double>(below(rng, 3));
      return reals(lo, lo + 1.0 + static_cast<double>(below(rng, 4)));
    }
    case 4:
      return integers(0.0, 1.0 + static_cast<double>(below(rng, 6)));
    case 5: {
      const double h = below(rng, 2) == 0 ? 0.25 : 0.5;
      return h_grid(0.0, h * (2.0 + static_cast<double>(below(rng, 7))), h);
    }
    default:
      return q_grid(2.0, 1 + static_cast<int>(below(rng, 4)));
  }
}

/// Segment endpoints plus a few quantized interior points of each dense segment.
std::vector<double> endpoint_candidates(const TimeScale& ts, std::mt19937_64& rng) {
  std::vector<double> out;
  for (const Segment& s : ts.segments()) {
    out.push_back(s.lo);
    out.push_back(s.hi);
    if (!s.degenerate()) {
      for (int k = 0; k < kDenseCandidates; ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back(std::clamp(s.lo + std::floor(u * s.length() * 16.0) / 16.0, s.lo, s.hi));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<double, double> draw_interval(const std::vector<double>& pts, std::mt19937_64& rng) {
  std::size_t i = below(rng, pts.size());
  std::size_t j = below(rng, pts.size() - 1);
  if (j >= i) {
    ++j;
  }
  if (i > j) {
    std::swap(i, j);
  }
  return {pts[i], pts[j]};
}

std::vector<BivariateFunction> resolve_functions(const std::vector<std::string>& names) {
  if (names.empty()) {
    return builtin_corpus();
  }
  std::vector<BivariateFunction> out;
  for (const std::string& n : names) {
    out.push_back(resolve_function(n));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    out += out.empty() ? p : "," + p;
  }
  return out;
}

std::map<std::string, std::string> config_echo(const CampaignConfig& cfg) {
  std::map<std::string, std::string> e;
  e["trials"] = std::to_string(cfg.trials);
  e["seed"] = std::to_string(cfg.seed);
  std::vector<std::string> ids;
  for (TheoremId id : cfg.theorems) {
    ids.push_back(to_string(id));
  }
  e["theorems"] = join(ids);
  e["functions"] = cfg.functions.empty() ? "builtin" : join(cfg.functions);
  e["ts.max_segments"] = std::to_string(cfg.timescale_params.max_segments);
  e["ts.span"] = precise_real(cfg.timescale_params.span);
  e["ts.min_gap"] = precise_real(cfg.timescale_params.min_gap);
  if (cfg.domain) {
    const FixedDomain& d = *cfg.domain;
    e["domain"] = d.timescale1 + " x " + d.timescale2 + " @ " + precise_real(d.a) + "," + precise_real(d.b) + "," +
                  precise_real(d.c) + "," + precise_real(d.d);
  }
  const QuadConfig& q = cfg.options.quad;
  e["quad.order"] = std::to_string(q.quad_order);
  e["quad.panel_tol"] = precise_real(q.panel_tol);
  e["quad.max_depth"] = std::to_string(q.max_depth);
  e["quad.derivative_step_scale"] = precise_real(q.derivative_step_scale);
  e["quad.supnorm_samples_per_segment"] = std::to_string(q.supnorm_samples_per_segment);
  e["quad.rel_floor"] = precise_real(q.rel_floor);
  e["tol.abs"] = precise_real(cfg.options.tolerance.abs);
  e["tol.rel"] = precise_real(cfg.options.tolerance.rel);
  e["identity.pure_point"] = precise_real(cfg.options.identity.pure_point);
  e["identity.dense"] = precise_real(cfg.options.identity.dense);
  e["anchor"] = to_string(cfg.options.anchor);
  return e;
}

int worker_count(int requested, std::size_t jobs) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("CHRONOSCALE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) {
      n = std::min(n, cap);
    }
  }
  return std::max(1, std::min<int>(n, static_cast<int>(jobs)));
}

InequalityResult failed_check(TheoremId theorem, const std::string& why) {
  InequalityResult r;
  r.theorem = theorem;
  r.pass = false;
  r.notes = why;
  return r;
}

InequalityResult guarded_verify(TheoremId theorem, const BivariateFunction& f, const BivariateFunction& g,
                                const TimeScalePair& pair, const Rectangle& rect, const VerifyOptions& opts) {
  try {
    return verify(theorem, f, g, pair, rect, opts);
  } catch (const Error& e) {
    InequalityResult r = failed_check(theorem, std::string("error: ") + e.what());
    r.timescale1 = pair.first.descriptor();
    r.timescale2 = pair.second.descriptor();
    r.rect = rect;
    r.f = f.label;
    r.g = g.label;
    return r;
  }
}

bool uses_g(TheoremId id) {
  return id == TheoremId::kThm21 || id == TheoremId::kThm22Stated || id == TheoremId::kThm22Derived;
}

}  // namespace

void CampaignConfig::validate() const {
  if (trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  if (theorems.empty()) {
    throw ConfigError("theorem list must not be empty");
  }
  if (threads < 0) {
    throw ConfigError("threads must be >= 0");
  }
  options.quad.validate();
}

std::string artifact_version() { return CHRONOSCALE_VERSION; }

ReportSummary summarize(const std::vector<TrialRecord>& records) {
  ReportSummary s;
  s.records = static_cast<int>(records.size());
  s.worst_margin = records.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const TrialRecord& rec : records) {
    const InequalityResult& r = rec.result;
    const std::string id = to_string(r.theorem);
    if (r.pass) {
      ++s.passed;
      ++s.passed_by_theorem[id];
    } else {
      ++s.failed;
      ++s.failed_by_theorem[id];
    }
    s.worst_margin = std::min(s.worst_margin, r.margin);
    if (r.theorem == TheoremId::kIdentity) {
      s.max_identity_residual = std::max(s.max_identity_residual, r.lhs);
    }
  }
  s.all_pass = s.failed == 0;
  return s;
}

std::optional<TrialInput> draw_trial(std::uint64_t seed, std::uint64_t index, const RandomTimeScaleParams& params,
                                     std::size_t corpus_size, std::string* skip_reason) {
  if (corpus_size == 0) {
    throw ConfigError("function list must not be empty");
  }
  std::mt19937_64 rng(stream_seed(seed, index));
  std::string reason = "no draw attempted";
  for (int attempt = 0; attempt < kDrawRetries; ++attempt) {
    try {
      TimeScalePair pair{draw_timescale(rng, params), draw_timescale(rng, params)};
      const auto xs = endpoint_candidates(pair.first, rng);
      const auto ys = endpoint_candidates(pair.second, rng);
      if (xs.size() < 2 || ys.size() < 2) {
        reason = "time scale with fewer than two points";
        continue;
      }
      const auto [a, b] = draw_interval(xs, rng);
      const auto [c, d] = draw_interval(ys, rng);
      const Rectangle rect = make_rectangle(pair, a, b, c, d);
      TrialInput in{std::move(pair), rect, below(rng, corpus_size), below(rng, corpus_size)};
      return in;
    } catch (const Error& e) {
      reason = e.what();
    }
  }
  if (skip_reason != nullptr) {
    *skip_reason = reason;
  }
  return std::nullopt;
}

VerificationReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<BivariateFunction> corpus = resolve_functions(cfg.functions);

  std::optional<TimeScalePair> fixed_pair;
  std::optional<Rectangle> fixed_rect;
  if (cfg.domain) {
    const FixedDomain& d = *cfg.domain;
    fixed_pair = TimeScalePair{parse_timescale(d.timescale1), parse_timescale(d.timescale2)};
    fixed_rect = make_rectangle(*fixed_pair, d.a, d.b, d.c, d.d);
  }

  const std::size_t per_trial = cfg.theorems.size();
  std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials) * per_trial);

  const auto run_trial = [&](int trial) {
    TrialRecord* out = &records[static_cast<std::size_t>(trial) * per_trial];
    std::optional<TrialInput> input;
    std::string skip_reason;
    if (fixed_pair) {
      std::mt19937_64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
      input = TrialInput{*fixed_pair, *fixed_rect, below(rng, corpus.size()), below(rng, corpus.size())};
    } else {
      input = draw_trial(cfg.seed, static_cast<std::uint64_t>(trial), cfg.timescale_params, corpus.size(),
                         &skip_reason);
    }
    for (std::size_t k = 0; k < per_trial; ++k) {
      const TheoremId id = cfg.theorems[k];
      out[k].trial = trial;
      if (!input) {
        out[k].result = failed_check(id, "skipped: " + skip_reason);
        continue;
      }
      const BivariateFunction& f = corpus[input->f];
      const BivariateFunction& g = corpus[input->g];
      out[k].result = guarded_verify(id, f, g, input->pair, input->rect, cfg.options);
      if (!uses_g(id)) {
        out[k].result.g.clear();
      }
    }
  };

  const int workers = worker_count(cfg.threads, static_cast<std::size_t>(cfg.trials));
  if (workers == 1) {
    for (int t = 0; t < cfg.trials; ++t) {
      run_trial(t);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next++; t < cfg.trials; t = next++) {
          run_trial(t);
        }
      });
    }
  }

  VerificationReport report;
  report.version = artifact_version();
  report.config = config_echo(cfg);
  report.records = std::move(records);
  report.summary = summarize(report.records);
  report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CounterexampleSearch search_counterexample(TheoremId theorem, int budget, std::uint64_t seed,
                                           const VerifyOptions& opts, const std::vector<std::string>& functions) {
  if (budget < 1) {
    throw ConfigError("budget must be >= 1");
  }
  const std::vector<BivariateFunction> corpus = resolve_functions(functions);
  CounterexampleSearch out;
  double best_score = -std::numeric_limits<double>::infinity();
  std::optional<TrialInput> best_input;

  const auto evaluate = [&](const TrialInput& in) {
    ++out.evaluations;
    InequalityResult r;
    try {
      r = verify(theorem, corpus[in.f], corpus[in.g], in.pair, in.rect, opts);
    } catch (const Error&) {
      return false;
    }
    if (!uses_g(theorem)) {
      r.g.clear();
    }
    const double score = r.lhs - r.rhs;
    if (score > best_score) {
      best_score = score;
      out.best = r;
      best_input = in;
    }
    if (!r.pass) {
      out.witness = r;
      return true;
    }
    return false;
  };

  // Random phase: about two thirds of the budget.
  const int random_budget = std::max(1, budget * 2 / 3);
  const RandomTimeScaleParams params;
  for (int i = 0; i < random_budget && out.evaluations < budget; ++i) {
    const auto in = draw_trial(seed, static_cast<std::uint64_t>(i), params, corpus.size());
    if (in && evaluate(*in)) {
      return out;
    }
    if (!in) {
      ++out.evaluations;
    }
  }

  // Coordinate refinement: move one rectangle side at a time to a neighbouring
  // candidate point, keeping any move that raises lhs - rhs.
  std::mt19937_64 rng(stream_seed(seed, ~0ULL));
  bool improved = true;
  while (best_input && improved && out.evaluations < budget) {
    improved = false;
    const TrialInput base = *best_input;
    const auto xs = endpoint_candidates(base.pair.first, rng);
    const auto ys = endpoint_candidates(base.pair.second, rng);
    for (int side = 0; side < 4 && out.evaluations < budget; ++side) {
      const auto& pts = side < 2 ? xs : ys;
      const double current = std::array{base.rect.a, base.rect.b, base.rect.c, base.rect.d}[side];
      const auto it = std::lower_bound(pts.begin(), pts.end(), current);
      const std::ptrdiff_t at = it - pts.begin();
      for (std::ptrdiff_t step : {-1, 1}) {
        const std::ptrdiff_t j = at + step;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(pts.size()) || out.evaluations >= budget) {
          continue;
        }
        double v[4] = {base.rect.a, base.rect.b, base.rect.c, base.rect.d};
        v[side] = pts[static_cast<std::size_t>(j)];
        if (!(v[0] < v[1]) || !(v[2] < v[3])) {
          continue;
        }
        TrialInput cand = base;
        cand.rect = make_rectangle(cand.pair, v[0], v[1], v[2], v[3]);
        const double before = best_score;
        if (evaluate(cand)) {
          return out;
        }
        improved = improved || best_score > before;
      }
    }
  }

  // Spend whatever refinement left over on further random draws.
  for (int i = random_budget; out.evaluations < budget; ++i) {
    const auto in = draw_trial(seed, static_cast<std::uint64_t>(i), params, corpus.size());
    if (in && evaluate(*in)) {
      return out;
    }
    if (!in) {
      ++out.evaluations;
    }
  }
  return out;
}

}  // namespace chronoscale
