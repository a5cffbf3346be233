#pragma once

#include <iosfwd>
#include <string>

#include "ibistk/perm_group.hpp"

namespace ibistk {

/// Line-based group text format:
///
///   degree <n>
///   gen <cycles>        e.g. gen (1 2)(3 4 5); gen () is the identity
///
/// Points are 1-based, '#' starts a comment, blank lines are ignored.
PermGroup parse_group(std::istream& in, std::string label = {});
PermGroup parse_group_text(const std::string& text, std::string label = {});
PermGroup load_group_file(const std::string& path);

/// Emits the exact grammar accepted by parse_group.
std::string format_group(const PermGroup& g);

} // namespace ibistk
