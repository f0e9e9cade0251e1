#ifndef HEISYM_REPORT_HPP
#define HEISYM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace heisym {

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

enum class ReportStatus { Pass, Fail, Info };

struct Report {
  std::string scenario;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  ReportStatus status() const;

  /// Records expected == actual as strings.
  void expect_eq(const std::string& label, const std::string& expected,
                 const std::string& actual);
  void expect_true(const std::string& label, bool condition);
  /// Informational entry: always ok, records an observation.
  void note(const std::string& label, const std::string& observation);
};

std::string status_name(ReportStatus s);

/// Stable JSON rendering per the report schema; elapsed_ms is included as
/// given (callers zero it for byte-reproducible output).
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace heisym

#endif
