#pragma once

#include <string>

namespace chronoscale {

/// Shortest decimal text that parses back to exactly `value`.
std::string shortest_real(double value);

/// Fixed 17-significant-digit text used for all CLI numeric output.
std::string precise_real(double value);

/// Parse a complete real literal; throws ConfigError naming `what` on failure.
double parse_real(const std::string& text, const std::string& what);

}  // namespace chronoscale
