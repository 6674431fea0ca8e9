#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parcount {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Configuration / precondition problems reported to the caller.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured element budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A table size bound (e.g. symmetric-function rank) was exceeded.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold exactly failed; signals a bug.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

#define PARCOUNT_CHECK(cond, msg)                          \
  do {                                                     \
    if (!(cond)) throw ::parcount::InvariantError((msg));  \
  } while (0)

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace parcount
