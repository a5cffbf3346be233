#include "app.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ibistk/bsgs.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/ct.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/group_io.hpp"
#include "ibistk/matroid.hpp"
#include "ibistk/orbits.hpp"
#include "ibistk/spectrum_search.hpp"

namespace ibistk::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

constexpr long kMatroidSummaryCap = 200;

} // namespace

AnalysisReport analyze_group(const PermGroup& g, const RunConfig& cfg) {
  cfg.check();
  auto t0 = Clock::now();

  AnalysisReport r;
  r.group = g.label.empty() ? "unnamed" : g.label;
  r.degree = g.degree;

  Bsgs chain = Bsgs::build(g);
  r.order = chain.order();
  r.primitive = is_transitive(g) && g.degree >= 1 && is_primitive(g);

  SearchCaps caps{cfg.node_cap, cfg.time_cap_seconds, cfg.workers};
  Spectrum s = irredundant_spectrum(chain, caps);
  r.spectrum.assign(s.sizes.begin(), s.sizes.end());
  r.capped = !s.complete;
  r.ibis = s.complete && s.sizes.size() == 1;
  r.base_size = s.sizes.empty() ? 0 : *s.sizes.begin();
  r.nodes = s.node_count;
  for (const auto& [size, w] : s.witnesses) r.witnesses[size] = w.points;

  if (r.ibis && r.degree <= kMatroidSummaryCap) {
    IbisVerdict v;
    v.is_ibis = true;
    v.decided = true;
    v.base_size = r.base_size;
    Matroid m = matroid_from_ibis(chain, v, kMatroidSummaryCap);
    MatroidSummary ms;
    ms.rank = m.rank;
    for (const auto& level : m.flats_by_rank)
      ms.flats_per_rank.push_back(static_cast<long>(level.size()));
    r.matroid = std::move(ms);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

CtReport ct_group(const PermGroup& g, const RunConfig& cfg) {
  cfg.check();
  auto t0 = Clock::now();
  CtReport r;
  r.group = g.label.empty() ? "unnamed" : g.label;
  r.degree = g.degree;
  Bsgs chain = Bsgs::build(g);
  r.order = chain.order();
  CtVerdict v = ct_verdict_combined(chain);
  r.ct = v.is_ct;
  r.methods_agree = v.method_agreement;
  r.abelian_centralizers = centralizer_abelian_scan(chain);
  if (v.violation)
    r.violation = std::vector<std::string>{format_cycles(v.violation->a),
                                           format_cycles(v.violation->t),
                                           format_cycles(v.violation->b)};
  r.elapsed_ms = ms_since(t0);
  return r;
}

PermGroup resolve_source(const std::string& group_path,
                         const std::string& catalog_name, const RunConfig& cfg) {
  if (group_path.empty() == catalog_name.empty())
    throw InputError("exactly one of --group and --catalog is required");
  if (!group_path.empty()) return load_group_file(group_path);
  return catalog_group(catalog_name, cfg.degree_cap);
}

std::string catalog_listing() {
  std::ostringstream out;
  for (const auto& e : catalog_registry()) {
    out << std::left << std::setw(34) << e.name << " degree " << std::setw(6)
        << e.expected.degree << " order " << std::setw(12)
        << e.expected.order.str();
    std::string note = e.expected.display();
    if (!note.empty()) out << " " << note;
    out << "\n";
  }
  return out.str();
}

int run_analyze(const std::string& group_path, const std::string& catalog_name,
                const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    PermGroup g = resolve_source(group_path, catalog_name, cfg);
    AnalysisReport r = analyze_group(g, cfg);
    if (cfg.json)
      out << to_json(r).dump(2) << "\n";
    else
      out << to_text(r);
    return r.capped ? 2 : 0;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_ct(const std::string& group_path, const std::string& catalog_name,
           const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    PermGroup g = resolve_source(group_path, catalog_name, cfg);
    CtReport r = ct_group(g, cfg);
    if (cfg.json)
      out << to_json(r).dump(2) << "\n";
    else
      out << to_text(r);
    return 0;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_catalog(const RunConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : catalog_registry()) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["degree"] = e.expected.degree;
      j["order"] = e.expected.order.str();
      j["expected"] = e.expected.display();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  } else {
    out << catalog_listing();
  }
  return 0;
}

int run_verify(const std::string& suite_name, const RunConfig& cfg,
               std::ostream& out, std::ostream& err) {
  bool full = false;
  if (suite_name == "full")
    full = true;
  else if (suite_name != "small") {
    err << "error: unknown suite '" << suite_name << "' (use small or full)\n";
    return 1;
  }
  try {
    SuiteResult r = run_suite(full, cfg);
    if (cfg.json)
      out << suite_json(r).dump(2) << "\n";
    else
      out << suite_table(r);
    return r.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace ibistk::cli
