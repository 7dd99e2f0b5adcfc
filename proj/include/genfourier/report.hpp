#pragma once

#include <string>
#include <vector>

namespace genfourier::report {

/// One verification case.  lhs/rhs are the compared quantities (for sup-norm
/// style checks lhs is the observed extreme and rhs the reference 0).
/// runtime_ms is shown on the console but never serialized, so reports from
/// identical configurations are byte-identical.
struct CaseRecord {
  std::string name;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct RunReport {
  std::string suite;
  std::vector<CaseRecord> cases;

  bool aggregate_pass() const;
  int failure_count() const;
};

/// Scientific notation with 17 significant digits and '.' decimal separator.
std::string format_sci(double v);

/// Deterministic JSON for one suite or a list of suites.
std::string to_json(const RunReport& report);
std::string to_json(const std::vector<RunReport>& reports);

/// Console rendering with per-case pass/fail lines and runtimes.
std::string to_console(const RunReport& report);

/// CSV assembly: header plus rows of format_sci-rendered numbers.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  const std::string& str() const { return text_; }

private:
  std::string text_;
  size_t columns_;
};

}  // namespace genfourier::report
