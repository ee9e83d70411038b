#pragma once

#include <iostream>
#include <sstream>

#include "fibcat/core.hpp"

namespace fibcat {

inline std::ostream& operator<<(std::ostream& os, const Violation& v) {
  os << v.law << "(";
  for (std::size_t i = 0; i < v.cells.size(); ++i) {
    if (i) os << ",";
    os << v.cells[i];
  }
  return os << ")";
}

inline std::string describe(const ValidationReport& rep, std::size_t max = 8) {
  std::ostringstream os;
  os << (rep.passed ? "passed" : "FAILED");
  for (std::size_t i = 0; i < rep.violations.size() && i < max; ++i)
    os << " " << rep.violations[i];
  if (rep.violations.size() > max) os << " ...";
  return os.str();
}

}  // namespace fibcat

#define REQUIRE_PASSED(rep)                \
  do {                                     \
    auto r_ = (rep);                       \
    INFO(fibcat::describe(r_));            \
    REQUIRE(r_.passed);                    \
  } while (0)
