#pragma once

#include <stdexcept>
#include <string>

namespace cy4gv {

/// A precondition of a mathematical operation was violated (non-effective
/// class, pole locus, out-of-table request, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A geometry fixture could not be parsed or failed validation.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant of the library itself broke. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cy4gv
