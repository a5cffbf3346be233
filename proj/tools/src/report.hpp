#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk::cli {

struct RunConfig {
  std::uint64_t node_cap = kDefaultNodeCap;
  double time_cap_seconds = kDefaultTimeCapSeconds;
  long degree_cap = kDefaultDegreeCap;
  long enumeration_cap = kDefaultEnumerationCap;
  int workers = 1;
  bool json = false;

  void check() const;
};

struct MatroidSummary {
  int rank = 0;
  std::vector<long> flats_per_rank;
};

/// The analysis report record. Points are stored 0-based and rendered
/// 1-based in every output format.
struct AnalysisReport {
  std::string group;
  int degree = 0;
  BigInt order;
  bool primitive = false;
  int base_size = 0;
  std::vector<int> spectrum;
  bool ibis = false;
  std::map<int, std::vector<int>> witnesses;
  bool capped = false;
  std::uint64_t nodes = 0;
  std::int64_t elapsed_ms = 0;
  std::optional<MatroidSummary> matroid;
};

nlohmann::ordered_json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

struct CtReport {
  std::string group;
  int degree = 0;
  BigInt order;
  bool ct = false;
  bool methods_agree = false;
  bool abelian_centralizers = false;
  std::optional<std::vector<std::string>> violation; // cycle strings (a, t, b)
  std::int64_t elapsed_ms = 0;
};

nlohmann::ordered_json to_json(const CtReport& r);
std::string to_text(const CtReport& r);

} // namespace ibistk::cli
