#pragma once

#include <string>

#include "chronoscale/harness.hpp"
#include "chronoscale/inequality.hpp"

namespace chronoscale {

enum class ReportFormat { kJson, kCsv };

/// "json" or "csv"; throws ConfigError otherwise.
ReportFormat parse_report_format(const std::string& name);

/// Full nested report. Record fields: trial, theorem, lhs, rhs, margin, pass,
/// timescale1, timescale2, rect, f, g, notes, tolerance.
std::string report_to_json(const VerificationReport& report, int indent = 2);

/// Inverse of report_to_json; throws IoError on malformed input.
VerificationReport report_from_json(const std::string& text);

/// Header plus one row per record.
std::string report_to_csv(const VerificationReport& report);

/// Single result as a JSON object (same field names as a report record).
std::string result_to_json(const InequalityResult& result, int indent = 2);

/// Writes the report; throws IoError naming the path on failure.
void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path);

/// Reads a JSON report written by emit_report.
VerificationReport read_report(const std::string& path);

}  // namespace chronoscale
