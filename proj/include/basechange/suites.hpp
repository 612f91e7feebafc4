#pragma once

#include <string>
#include <vector>

#include "basechange/bundle.hpp"

namespace basechange {

struct SuiteInfo {
  std::string id;
  std::string operation;  // the one engine operation the suite drives
  std::string summary;
};

// Registry order is the canonical report order.
const std::vector<SuiteInfo>& suite_registry();

struct CheckResult {
  std::string suite;
  std::string subject;
  LawReport report;
  bool skipped = false;
  std::string note;
  double millis = 0;

  std::string id() const { return suite + "/" + subject; }
  std::string status() const { return skipped ? "skipped" : report.ok() ? "pass" : "fail"; }
};

// "all" expands to the registry; an empty list runs nothing. Unknown ids
// throw StructuralError before anything runs.
std::vector<CheckResult> run_suite(const Bundle& b, const std::vector<std::string>& suites);

// Schema version 1, documented in docs/report-schema.md. Keys are sorted;
// timings appear only when requested so that plain reports are reproducible.
std::string report_json(const std::vector<CheckResult>& results, bool with_timing = false);
std::string report_text(const std::vector<CheckResult>& results, bool with_timing = false);

// 0 all pass, 1 some law failed, 2 some check broke structurally.
int exit_status(const std::vector<CheckResult>& results);

}  // namespace basechange
