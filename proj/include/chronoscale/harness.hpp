#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chronoscale/delta_calculus.hpp"
#include "chronoscale/inequality.hpp"
#include "chronoscale/timescale.hpp"

namespace chronoscale {

/// Pins every trial of a campaign to one time-scale pair and rectangle.
struct FixedDomain {
  std::string timescale1;
  std::string timescale2;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct CampaignConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<TheoremId> theorems{TheoremId::kThm21};
  RandomTimeScaleParams timescale_params;
  /// Corpus labels or expressions; empty means the whole built-in corpus.
  std::vector<std::string> functions;
  std::optional<FixedDomain> domain;
  VerifyOptions options;
  /// Worker threads; 0 means CHRONOSCALE_THREADS or the hardware count.
  int threads = 0;

  /// Throws ConfigError on trials < 1, empty theorem list or bad QuadConfig.
  void validate() const;
};

/// One theorem check inside a campaign.
struct TrialRecord {
  int trial = 0;
  InequalityResult result;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ReportSummary {
  int records = 0;
  int passed = 0;
  int failed = 0;
  std::map<std::string, int> passed_by_theorem;
  std::map<std::string, int> failed_by_theorem;
  double worst_margin = 0.0;
  double max_identity_residual = 0.0;
  bool all_pass = true;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string version;
  /// Flattened configuration echo (key -> printed value).
  std::map<std::string, std::string> config;
  std::vector<TrialRecord> records;
  ReportSummary summary;
  /// Wall clock; excluded from equality and determinism comparisons.
  double duration_seconds = 0.0;

  friend bool operator==(const VerificationReport& x, const VerificationReport& y) {
    return x.version == y.version && x.config == y.config && x.records == y.records && x.summary == y.summary;
  }
};

/// Library version string.
std::string artifact_version();

/// Recomputes the summary from the records.
ReportSummary summarize(const std::vector<TrialRecord>& records);

/// Deterministic in cfg (thread count does not change the result).
VerificationReport run_campaign(const CampaignConfig& cfg);

/// A sampled check input: time-scale pair, rectangle and function indices.
struct TrialInput {
  TimeScalePair pair;
  Rectangle rect;
  std::size_t f = 0;
  std::size_t g = 0;
};

/// Draw used by campaign trial `index`; exposed for reproducing single trials.
std::optional<TrialInput> draw_trial(std::uint64_t seed, std::uint64_t index, const RandomTimeScaleParams& params,
                                     std::size_t corpus_size, std::string* skip_reason = nullptr);

struct CounterexampleSearch {
  /// First violation found, if any.
  std::optional<InequalityResult> witness;
  /// Candidate with the largest lhs - rhs seen.
  std::optional<InequalityResult> best;
  int evaluations = 0;
};

/// Random search over corpus functions, time scales and rectangles, then
/// coordinate refinement of the rectangle around the best candidate.
/// Deterministic in seed.
CounterexampleSearch search_counterexample(TheoremId theorem, int budget, std::uint64_t seed,
                                           const VerifyOptions& opts = {},
                                           const std::vector<std::string>& functions = {});

}  // namespace chronoscale
