#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "chronoscale/inequality.hpp"

namespace chronoscale {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/**
 * Parses "key=value" lines ('#' starts a comment, blank lines are skipped).
 * Keys may use '-' or '_' interchangeably and are normalized to '_'.
 * Throws ConfigError on a malformed line and IoError when the file is missing.
 */
std::map<std::string, std::string> read_config_file(const std::string& path);

/**
 * Applies numeric and tolerance overrides to opts. Recognized keys:
 * quad_order, panel_tol, max_depth, derivative_step_scale,
 * supnorm_samples_per_segment, rel_floor, tol_abs, tol_rel,
 * identity_tol_pure, identity_tol_dense, anchor. Unknown keys are ignored
 * here; callers reject them. Throws ConfigError naming the key on bad values.
 */
void apply_overrides(const std::map<std::string, std::string>& values, VerifyOptions& opts);

/// All keys accepted in a config file.
const std::vector<std::string>& config_keys();

/**
 * Runs the tool. args[0] is the program name. Subcommands: verify, campaign,
 * counterexample, integrate. Returns kExitOk, kExitViolation or kExitUsage.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chronoscale
