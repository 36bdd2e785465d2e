#ifndef HAMEX_ERRORS_HPP
#define HAMEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamex {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument / contract violation at an API boundary.
class input_error : public error {
 public:
  explicit input_error(const std::string& what) : error(what) {}
};

// An exponential-time oracle was asked to exceed its configured budget.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

// A runtime invariant that should be logically impossible was breached
// (e.g. a Hamilton cycle certificate on a graph with a degree-1 vertex).
class invariant_error : public error {
 public:
  explicit invariant_error(const std::string& what) : error(what) {}
};

}  // namespace hamex

#endif
