#include "ibistk/group_io.hpp"

#include <fstream>
#include <sstream>

#include "ibistk/errors.hpp"

namespace ibistk {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

PermGroup parse_group(std::istream& in, std::string label) {
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream fields(s);
    std::string keyword;
    fields >> keyword;
    if (keyword == "degree") {
      if (degree != -1)
        throw InputError("line " + std::to_string(lineno) + ": duplicate degree");
      long d = -1;
      fields >> d;
      if (!fields || d < 1)
        throw InputError("line " + std::to_string(lineno) + ": bad degree");
      degree = static_cast<int>(d);
    } else if (keyword == "gen") {
      if (degree == -1)
        throw InputError("line " + std::to_string(lineno) +
                         ": gen before degree");
      std::string rest;
      std::getline(fields, rest);
      try {
        gens.push_back(parse_cycles(degree, rest));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown keyword '" +
                       keyword + "'");
    }
  }
  if (degree == -1) throw InputError("missing degree line");
  if (gens.empty()) throw InputError("no generators given");
  return PermGroup(degree, std::move(gens), std::move(label));
}

PermGroup parse_group_text(const std::string& text, std::string label) {
  std::istringstream in(text);
  return parse_group(in, std::move(label));
}

PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file: " + path);
  return parse_group(in, path);
}

std::string format_group(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree) + "\n";
  for (const auto& p : g.generators)
    out += "gen " + format_cycles(p) + "\n";
  return out;
}

} // namespace ibistk
