#pragma once

#include <map>

#include "stsrank/bigint.hpp"
#include "stsrank/errors.hpp"

namespace stsrank::counting {

/// Exact signed product of prime powers with rational exponents, times a
/// rational residual unit factor.  Carries the corollary closed forms whose
/// exponents (like w^2/24 - 3w/4 + k + 1/3) are only integral in combination.
class FactoredValue {
 public:
  FactoredValue() = default;  // one
  static FactoredValue zero();
  static FactoredValue from_integer(const Int& n);
  static FactoredValue from_factorial(unsigned n);
  static FactoredValue from_q_factorial(unsigned n, unsigned q);
  static FactoredValue prime_power(const Int& prime, const Rat& exponent);

  FactoredValue& operator*=(const FactoredValue& o);
  FactoredValue& operator/=(const FactoredValue& o);
  friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) { return a *= b; }
  friend FactoredValue operator/(FactoredValue a, const FactoredValue& b) { return a /= b; }

  FactoredValue pow(const Rat& e) const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const std::map<Int, Rat>& exponents() const { return exp_; }
  const Rat& unit() const { return unit_; }

  /// All exponents integral (possibly negative).
  bool has_integral_exponents() const;
  /// Requires integral exponents; value may be a non-integer rational.
  Rat to_rational() const;
  /// Convertible iff every exponent is a nonnegative integer and the residual
  /// unit is an integer (1 by construction).
  Int to_integer() const;

 private:
  void trim();
  int sign_ = 1;
  std::map<Int, Rat> exp_;
  Rat unit_ = 1;
};

}  // namespace stsrank::counting
