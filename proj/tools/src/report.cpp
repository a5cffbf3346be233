#include "report.hpp"

#include <sstream>

#include "ibistk/errors.hpp"

namespace ibistk::cli {

void RunConfig::check() const {
  if (node_cap == 0 || time_cap_seconds <= 0 || degree_cap <= 0 ||
      enumeration_cap <= 0)
    throw InputError("caps must be positive");
  if (workers < 1) throw InputError("workers must be at least 1");
}

namespace {

nlohmann::ordered_json one_based(const std::vector<int>& pts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int p : pts) arr.push_back(p + 1);
  return arr;
}

std::string join_points(const std::vector<int>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(pts[i] + 1);
  }
  return out;
}

} // namespace

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["degree"] = r.degree;
  j["order"] = r.order.str();
  j["primitive"] = r.primitive;
  j["base_size"] = r.base_size;
  j["spectrum"] = r.spectrum;
  j["ibis"] = r.ibis;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [size, pts] : r.witnesses) w[std::to_string(size)] = one_based(pts);
  j["witnesses"] = w;
  j["capped"] = r.capped;
  j["elapsed_ms"] = r.elapsed_ms;
  j["nodes"] = r.nodes;
  if (r.matroid) {
    nlohmann::ordered_json m;
    m["rank"] = r.matroid->rank;
    m["flats_per_rank"] = r.matroid->flats_per_rank;
    j["matroid"] = m;
  } else {
    j["matroid"] = nullptr;
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "group: " << r.group << "\n";
  out << "degree: " << r.degree << "\n";
  out << "order: " << r.order.str() << "\n";
  out << "primitive: " << (r.primitive ? "true" : "false") << "\n";
  out << "base_size: " << r.base_size << "\n";
  out << "spectrum:";
  for (int s : r.spectrum) out << " " << s;
  out << "\n";
  out << "ibis: " << (r.ibis ? "true" : "false") << "\n";
  for (const auto& [size, pts] : r.witnesses)
    out << "witness[" << size << "]: " << join_points(pts) << "\n";
  out << "capped: " << (r.capped ? "true" : "false") << "\n";
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
  out << "nodes: " << r.nodes << "\n";
  if (r.matroid) {
    out << "matroid_rank: " << r.matroid->rank << "\n";
    out << "matroid_flats_per_rank:";
    for (long f : r.matroid->flats_per_rank) out << " " << f;
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const CtReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["degree"] = r.degree;
  j["order"] = r.order.str();
  j["ct"] = r.ct;
  j["methods_agree"] = r.methods_agree;
  j["abelian_centralizers"] = r.abelian_centralizers;
  if (r.violation) {
    nlohmann::ordered_json v;
    v["a"] = (*r.violation)[0];
    v["t"] = (*r.violation)[1];
    v["b"] = (*r.violation)[2];
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const CtReport& r) {
  std::ostringstream out;
  out << "group: " << r.group << "\n";
  out << "degree: " << r.degree << "\n";
  out << "order: " << r.order.str() << "\n";
  out << "ct: " << (r.ct ? "true" : "false") << "\n";
  out << "methods_agree: " << (r.methods_agree ? "true" : "false") << "\n";
  out << "abelian_centralizers: " << (r.abelian_centralizers ? "true" : "false")
      << "\n";
  if (r.violation)
    out << "violation: a=" << (*r.violation)[0] << " t=" << (*r.violation)[1]
        << " b=" << (*r.violation)[2] << "\n";
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
  return out.str();
}

} // namespace ibistk::cli
