#ifndef MAPGLUE_SUITES_HPP
#define MAPGLUE_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mapglue/enumeration.hpp"

namespace mapglue {

// Outcome of a verification suite. Lines start with "ok", "FAIL", "skip"
// (beyond the cap) or "divergence" (a known misprint, oracle kept).
struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> lines;
};

// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

// cfg.max_edges bounds every enumeration; larger cases are skipped.
// Throws UnknownFormat for an unknown suite name.
SuiteResult run_suite(std::string_view name, const EnumerationConfig& cfg);

SuiteResult verify_roundtrip(const EnumerationConfig& cfg);
SuiteResult verify_counts(const EnumerationConfig& cfg);
SuiteResult verify_series(const EnumerationConfig& cfg);
SuiteResult verify_rerooting(const EnumerationConfig& cfg);
SuiteResult verify_integrality_suite(const EnumerationConfig& cfg);
SuiteResult verify_bubbles(const EnumerationConfig& cfg);

} // namespace mapglue

#endif // MAPGLUE_SUITES_HPP
