#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurlab {

/// Exact unbounded nonnegative integer used for all coloring counts.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used for the mu() formulas.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a computation would exceed its configured search budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Count pow_count(Count base, std::uint64_t exp) {
  Count result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace schurlab
