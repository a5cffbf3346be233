#pragma once

#include <stdexcept>
#include <string>

namespace ibistk {

/// Malformed or out-of-contract arguments (bad degrees, parse failures,
/// unknown names).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured cap (degree, enumeration size, search nodes) was exceeded.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mathematically undefined request, e.g. inverting zero in a field.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its stated hypotheses.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ibistk
