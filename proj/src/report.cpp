#include "chronoscale/report.hpp"

#include <fstream>
#include <sstream>

#include "chronoscale/error.hpp"
#include "chronoscale/format.hpp"
#include "json.hpp"

namespace chronoscale {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json result_json(const InequalityResult& r) {
  ordered_json j;
  j["theorem"] = to_string(r.theorem);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["pass"] = r.pass;
  j["timescale1"] = r.timescale1;
  j["timescale2"] = r.timescale2;
  j["rect"] = {r.rect.a, r.rect.b, r.rect.c, r.rect.d};
  j["f"] = r.f;
  j["g"] = r.g;
  j["notes"] = r.notes;
  j["tolerance"] = {{"abs", r.tolerance.abs}, {"rel", r.tolerance.rel}};
  return j;
}

InequalityResult result_from(const json& j) {
  InequalityResult r;
  r.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.timescale1 = j.at("timescale1").get<std::string>();
  r.timescale2 = j.at("timescale2").get<std::string>();
  const auto& rect = j.at("rect");
  r.rect = Rectangle{rect.at(0).get<double>(), rect.at(1).get<double>(), rect.at(2).get<double>(),
                     rect.at(3).get<double>()};
  r.f = j.at("f").get<std::string>();
  r.g = j.at("g").get<std::string>();
  r.notes = j.at("notes").get<std::string>();
  r.tolerance.abs = j.at("tolerance").at("abs").get<double>();
  r.tolerance.rel = j.at("tolerance").at("rel").get<double>();
  return r;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << body;
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") {
    return ReportFormat::kJson;
  }
  if (name == "csv") {
    return ReportFormat::kCsv;
  }
  throw ConfigError("unknown report format '" + name + "' (expected json or csv)");
}

std::string result_to_json(const InequalityResult& result, int indent) { return result_json(result).dump(indent); }

std::string report_to_json(const VerificationReport& report, int indent) {
  ordered_json j;
  j["artifact"] = "chronoscale";
  j["version"] = report.version;
  j["config"] = report.config;
  ordered_json records = ordered_json::array();
  for (const TrialRecord& rec : report.records) {
    ordered_json r;
    r["trial"] = rec.trial;
    const ordered_json fields = result_json(rec.result);
    for (const auto& [key, value] : fields.items()) {
      r[key] = value;
    }
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  const ReportSummary& s = report.summary;
  j["summary"] = {{"records", s.records},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"passed_by_theorem", s.passed_by_theorem},
                  {"failed_by_theorem", s.failed_by_theorem},
                  {"worst_margin", s.worst_margin},
                  {"max_identity_residual", s.max_identity_residual},
                  {"all_pass", s.all_pass}};
  j["duration_seconds"] = report.duration_seconds;
  return j.dump(indent) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    VerificationReport report;
    report.version = j.at("version").get<std::string>();
    report.config = j.at("config").get<std::map<std::string, std::string>>();
    for (const auto& r : j.at("records")) {
      report.records.push_back(TrialRecord{r.at("trial").get<int>(), result_from(r)});
    }
    const auto& s = j.at("summary");
    report.summary.records = s.at("records").get<int>();
    report.summary.passed = s.at("passed").get<int>();
    report.summary.failed = s.at("failed").get<int>();
    report.summary.passed_by_theorem = s.at("passed_by_theorem").get<std::map<std::string, int>>();
    report.summary.failed_by_theorem = s.at("failed_by_theorem").get<std::map<std::string, int>>();
    report.summary.worst_margin = s.at("worst_margin").get<double>();
    report.summary.max_identity_residual = s.at("max_identity_residual").get<double>();
    report.summary.all_pass = s.at("all_pass").get<bool>();
    report.duration_seconds = j.value("duration_seconds", 0.0);
    return report;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "trial,theorem,lhs,rhs,margin,pass,timescale1,timescale2,rect,f,g,notes\n";
  for (const TrialRecord& rec : report.records) {
    const InequalityResult& r = rec.result;
    out << rec.trial << ',' << to_string(r.theorem) << ',' << precise_real(r.lhs) << ',' << precise_real(r.rhs)
        << ',' << precise_real(r.margin) << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.timescale1)
        << ',' << csv_field(r.timescale2) << ',' << csv_field(r.rect.descriptor()) << ',' << csv_field(r.f) << ','
        << csv_field(r.g) << ',' << csv_field(r.notes) << '\n';
  }
  return out.str();
}

void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
  write_file(path, format == ReportFormat::kJson ? report_to_json(report) : report_to_csv(report));
}

VerificationReport read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return report_from_json(buf.str());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace chronoscale
