#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stsrank {

// All counts are exact; decimal serialization only, never scientific notation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Int int_factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace stsrank
