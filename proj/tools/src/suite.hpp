#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "report.hpp"

namespace ibistk::cli {

enum class ClaimStatus { Pass, Fail, Skip };

struct ClaimResult {
  int criterion = 0;
  std::string id;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::Fail;
  bool planned_skip = false;
  std::string reason;
  std::int64_t elapsed_ms = 0;
};

struct SuiteResult {
  std::vector<ClaimResult> claims;

  /// True when nothing failed and every skip was planned.
  bool ok() const;
  int failures() const;
};

/// Runs the verification claim ledger. The small suite leaves out the
/// long-running diagonal cases; full runs everything.
SuiteResult run_suite(bool full, const RunConfig& cfg);

std::string suite_table(const SuiteResult& r);
nlohmann::ordered_json suite_json(const SuiteResult& r);

} // namespace ibistk::cli
