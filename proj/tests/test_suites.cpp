#include <doctest.h>

#include <algorithm>

#include "mapglue/suites.hpp"

using namespace mapglue;

namespace {

bool has_line(const SuiteResult& r, std::string_view prefix, std::string_view needle)
{
  return std::any_of(r.lines.begin(), r.lines.end(), [&](const std::string& l) {
    return l.rfind(prefix, 0) == 0 && l.find(needle) != std::string::npos;
  });
}

} // namespace

TEST_CASE("every suite passes under the default cap")
{
  EnumerationConfig cfg;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto r = run_suite(name, cfg);
    CHECK(r.name == name);
    CHECK(r.passed);
    CHECK(r.failures == 0);
    CHECK(r.checks > 0);
    CHECK_FALSE(has_line(r, "FAIL", ""));
  }
}

TEST_CASE("known misprints are reported, not failed")
{
  EnumerationConfig cfg;
  const auto counts = verify_counts(cfg);
  CHECK(counts.passed);
  CHECK(has_line(counts, "divergence", ""));
  const auto series = verify_series(cfg);
  CHECK(has_line(series, "divergence", "32"));
}

TEST_CASE("small caps skip instead of failing")
{
  EnumerationConfig cfg;
  cfg.max_edges = 2;
  const auto r = verify_counts(cfg);
  CHECK(r.passed);
  CHECK(has_line(r, "skip", ""));
  CHECK(has_line(r, "ok", ""));
}

TEST_CASE("unknown suite")
{
  CHECK_THROWS_AS(run_suite("nope", EnumerationConfig{}), Error);
  CHECK(suite_names().size() == 6);
}
