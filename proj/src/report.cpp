#include "heisym/report.hpp"

#include <json.hpp>

#include <sstream>

namespace heisym {

ReportStatus Report::status() const {
  for (const auto& c : checks)
    if (!c.ok) return ReportStatus::Fail;
  return ReportStatus::Pass;
}

void Report::expect_eq(const std::string& label, const std::string& expected,
                       const std::string& actual) {
  checks.push_back({label, expected, actual, expected == actual});
}

void Report::expect_true(const std::string& label, bool condition) {
  checks.push_back({label, "true", condition ? "true" : "false", condition});
}

void Report::note(const std::string& label, const std::string& observation) {
  checks.push_back({label, "recorded", observation, true});
}

std::string status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Info: return "info";
  }
  return "?";
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario;
  j["status"] = status_name(r.status());
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["label"] = c.label;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["ok"] = c.ok;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "[" << status_name(r.status()) << "] " << r.scenario << "\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.ok ? "ok  " : "FAIL") << " " << c.label;
    if (c.expected != "true" || !c.ok) {
      out << " (expected: " << c.expected << ", actual: " << c.actual << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace heisym
