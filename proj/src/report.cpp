#include <genfourier/report.hpp>

#include <genfourier/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace genfourier::report {

using ordered_json = nlohmann::ordered_json;

bool RunReport::aggregate_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; });
}

int RunReport::failure_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseRecord& c) { return !c.pass; }));
}

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

namespace {

ordered_json case_json(const CaseRecord& c) {
  ordered_json j;
  j["name"] = c.name;
  j["inputs"] = c.inputs;
  j["lhs"] = format_sci(c.lhs);
  j["rhs"] = format_sci(c.rhs);
  j["residual"] = format_sci(c.residual);
  j["tolerance"] = format_sci(c.tolerance);
  j["pass"] = c.pass;
  return j;
}

ordered_json report_json(const RunReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["case_count"] = r.cases.size();
  j["failures"] = r.failure_count();
  j["aggregate_pass"] = r.aggregate_pass();
  j["cases"] = ordered_json::array();
  for (const auto& c : r.cases) j["cases"].push_back(case_json(c));
  return j;
}

}  // namespace

std::string to_json(const RunReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const std::vector<RunReport>& reports) {
  ordered_json j;
  bool all = true;
  for (const auto& r : reports) all = all && r.aggregate_pass();
  j["aggregate_pass"] = all;
  j["suites"] = ordered_json::array();
  for (const auto& r : reports) j["suites"].push_back(report_json(r));
  return j.dump(2) + "\n";
}

std::string to_console(const RunReport& report) {
  std::ostringstream out;
  out << "== suite " << report.suite << " ==\n";
  for (const auto& c : report.cases) {
    char t[32];
    std::snprintf(t, sizeof t, "%.1f", c.runtime_ms);
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.inputs.empty()) out << " [" << c.inputs << "]";
    out << "  residual=" << format_sci(c.residual) << " tol=" << format_sci(c.tolerance) << " ("
        << t << " ms)\n";
  }
  out << (report.aggregate_pass() ? "PASS" : "FAIL") << "  " << report.suite << ": "
      << report.cases.size() - report.failure_count() << "/" << report.cases.size()
      << " cases passed\n";
  return out.str();
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw ArgumentError("CsvWriter: wrong column count");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

}  // namespace genfourier::report
