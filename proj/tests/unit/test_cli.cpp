#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/group_io.hpp"

using namespace ibistk;
using namespace ibistk::cli;

namespace {

std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("IBIS_FIXTURES");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

// Text reports are key: value lines; fold them into a map for comparison.
std::map<std::string, std::string> parse_text_report(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    auto b = val.find_first_not_of(' ');
    kv[key] = b == std::string::npos ? "" : val.substr(b);
  }
  return kv;
}

} // namespace

TEST_CASE("analysis report for a subset action") {
  RunConfig cfg;
  AnalysisReport r = analyze_group(catalog_group("sym:6:sets:2"), cfg);
  CHECK(r.group == "sym:6:sets:2");
  CHECK(r.degree == 15);
  CHECK(r.order == 720);
  CHECK(r.primitive);
  CHECK(r.ibis);
  CHECK(r.base_size == 4);
  CHECK(r.spectrum == std::vector<int>{4});
  CHECK_FALSE(r.capped);
  REQUIRE(r.matroid.has_value());
  CHECK(r.matroid->rank == 4);
}

TEST_CASE("analysis report for the diagonal ibis family") {
  RunConfig cfg;
  AnalysisReport r = analyze_group(catalog_group("diag:psl2:4:2"), cfg);
  CHECK(r.degree == 60);
  CHECK(r.ibis);
  CHECK(r.base_size == 3);
  CHECK(r.primitive);
}

TEST_CASE("regular group from a file has base size one") {
  RunConfig cfg;
  PermGroup g = load_group_file(fixture_path("k4.grp"));
  AnalysisReport r = analyze_group(g, cfg);
  CHECK(r.base_size == 1);
  CHECK(r.spectrum == std::vector<int>{1});
  CHECK(r.ibis);
  CHECK(r.order == 4);
}

TEST_CASE("json and text reports carry identical values") {
  RunConfig cfg;
  AnalysisReport r = analyze_group(catalog_group("agl:1:7"), cfg);
  auto j = to_json(r);
  auto kv = parse_text_report(to_text(r));
  CHECK(kv.at("group") == j["group"]);
  CHECK(kv.at("degree") == std::to_string(j["degree"].get<int>()));
  CHECK(kv.at("order") == j["order"]);
  CHECK(kv.at("primitive") == (j["primitive"].get<bool>() ? "true" : "false"));
  CHECK(kv.at("base_size") == std::to_string(j["base_size"].get<int>()));
  CHECK(kv.at("ibis") == (j["ibis"].get<bool>() ? "true" : "false"));
  CHECK(kv.at("capped") == (j["capped"].get<bool>() ? "true" : "false"));
  // spectrum values agree
  std::string spec_text = kv.at("spectrum");
  std::string spec_json;
  for (int s : j["spectrum"].get<std::vector<int>>()) {
    if (!spec_json.empty()) spec_json += " ";
    spec_json += std::to_string(s);
  }
  CHECK(spec_text == spec_json);
}

TEST_CASE("json reports expose the documented fields") {
  RunConfig cfg;
  auto j = to_json(analyze_group(catalog_group("psl2:4"), cfg));
  for (const char* field : {"group", "degree", "order", "primitive",
                            "base_size", "spectrum", "ibis", "witnesses",
                            "capped", "elapsed_ms"})
    CHECK(j.contains(field));
  CHECK(j["order"].is_string());
  CHECK(j["witnesses"].is_object());
  // witness points are 1-based
  for (const auto& [size, pts] : j["witnesses"].items())
    for (const auto& p : pts) CHECK(p.get<int>() >= 1);
}

TEST_CASE("reports are deterministic apart from wall time") {
  RunConfig cfg;
  AnalysisReport a = analyze_group(catalog_group("psl2:8:dihedral"), cfg);
  AnalysisReport b = analyze_group(catalog_group("psl2:8:dihedral"), cfg);
  auto ja = to_json(a);
  auto jb = to_json(b);
  ja["elapsed_ms"] = 0;
  jb["elapsed_ms"] = 0;
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("exit codes follow the contract") {
  std::ostringstream out, err;
  RunConfig cfg;
  CHECK(run_analyze("", "sym:4", cfg, out, err) == 0);
  CHECK(run_analyze("", "no:such:group", cfg, out, err) == 1);
  CHECK(run_analyze("/nonexistent/file.grp", "", cfg, out, err) == 1);
  CHECK(run_analyze("", "", cfg, out, err) == 1);

  RunConfig tiny = cfg;
  tiny.node_cap = 2;
  CHECK(run_analyze("", "sym:8", tiny, out, err) == 2);
}

TEST_CASE("catalog listing is stable and annotated") {
  std::ostringstream a, b;
  RunConfig cfg;
  run_catalog(cfg, a);
  run_catalog(cfg, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("agl:1:7") != std::string::npos);
  CHECK(a.str().find("IBIS, b=2") != std::string::npos);
  CHECK(a.str().find("alt7:15") != std::string::npos);
  CHECK(a.str().find("diag:psl2:8:2") != std::string::npos);
}

TEST_CASE("ct reports") {
  RunConfig cfg;
  CtReport r = ct_group(catalog_group("psl2:8"), cfg);
  CHECK(r.ct);
  CHECK(r.methods_agree);
  CHECK_FALSE(r.violation.has_value());

  CtReport s = ct_group(catalog_group("alt:7"), cfg);
  CHECK_FALSE(s.ct);
  CHECK(s.methods_agree);
  REQUIRE(s.violation.has_value());
  CHECK(s.violation->size() == 3);

  auto j = to_json(s);
  CHECK(j["ct"].get<bool>() == false);
  CHECK(j["violation"].is_object());
}

TEST_CASE("verify rejects unknown suite names") {
  std::ostringstream out, err;
  RunConfig cfg;
  CHECK(run_verify("medium", cfg, out, err) == 1);
}

TEST_CASE("the binary honors the exit code contract end to end") {
  const char* bin = std::getenv("IBIS_BIN");
  REQUIRE(bin != nullptr);
  std::string binary(bin);
  auto exit_code = [](const std::string& cmd) {
    int status = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(exit_code(binary + " analyze --catalog sym:4") == 0);
  CHECK(exit_code(binary + " analyze --catalog sym:8 --nodes 3") == 2);
  CHECK(exit_code(binary + " analyze --catalog bogus") == 1);
  CHECK(exit_code(binary + " analyze --catalog sym:4 --frobulate") == 1);
  CHECK(exit_code(binary + " catalog") == 0);
  CHECK(exit_code(binary + " ct --catalog psl2:4") == 0);
  CHECK(exit_code(binary + " ct --catalog sym:8") == 2); // order over the pair-scan cap
  CHECK(exit_code(binary + " verify --suite nope") == 1);
  CHECK(exit_code(binary + " analyze --group " + fixture_path("k4.grp")) == 0);
}

TEST_CASE("starved caps surface as skipped claims and a failing suite") {
  RunConfig cfg;
  cfg.node_cap = 10;
  SuiteResult r = run_suite(false, cfg);
  CHECK_FALSE(r.ok());
  bool saw_unplanned_skip = false;
  for (const auto& c : r.claims)
    if (c.status == ClaimStatus::Skip && !c.planned_skip) saw_unplanned_skip = true;
  CHECK(saw_unplanned_skip);
  std::ostringstream out, err;
  CHECK(run_verify("small", cfg, out, err) == 1);
}
