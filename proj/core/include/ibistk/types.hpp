#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace ibistk {

// Group orders are exact unbounded integers; degrees stay in int range.
using BigInt = boost::multiprecision::cpp_int;

constexpr long kDefaultDegreeCap = 1'000'000;
constexpr long kDefaultEnumerationCap = 1'000'000;
constexpr std::uint64_t kDefaultNodeCap = 10'000'000;
constexpr double kDefaultTimeCapSeconds = 300.0;

} // namespace ibistk
