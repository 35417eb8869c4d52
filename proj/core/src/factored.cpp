#include "stsrank/factored.hpp"

#include <utility>

namespace stsrank::counting {

FactoredValue FactoredValue::zero() {
  FactoredValue f;
  f.sign_ = 0;
  return f;
}

FactoredValue FactoredValue::from_integer(const Int& n) {
  if (n == 0) return zero();
  FactoredValue f;
  Int rest = n;
  if (rest < 0) {
    f.sign_ = -1;
    rest = -rest;
  }
  for (Int d = 2; d * d <= rest; d == 2 ? d = 3 : d += 2) {
    unsigned long e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e) f.exp_[d] = e;
  }
  if (rest > 1) f.exp_[rest] += 1;
  return f;
}

FactoredValue FactoredValue::from_factorial(unsigned n) {
  FactoredValue f;
  for (unsigned i = 2; i <= n; ++i) f *= from_integer(i);
  return f;
}

FactoredValue FactoredValue::from_q_factorial(unsigned n, unsigned q) {
  FactoredValue f;
  for (unsigned s = 1; s <= n; ++s) {
    Int term = 0, qp = 1;
    for (unsigned i = 0; i < s; ++i) {
      term += qp;
      qp *= q;
    }
    f *= from_integer(term);
  }
  return f;
}

FactoredValue FactoredValue::prime_power(const Int& prime, const Rat& exponent) {
  FactoredValue f;
  if (exponent != 0) f.exp_[prime] = exponent;
  return f;
}

void FactoredValue::trim() {
  for (auto it = exp_.begin(); it != exp_.end();)
    it = it->second == 0 ? exp_.erase(it) : std::next(it);
}

FactoredValue& FactoredValue::operator*=(const FactoredValue& o) {
  if (sign_ == 0 || o.sign_ == 0) return *this = zero();
  sign_ *= o.sign_;
  unit_ *= o.unit_;
  for (const auto& [p, e] : o.exp_) exp_[p] += e;
  trim();
  return *this;
}

FactoredValue& FactoredValue::operator/=(const FactoredValue& o) {
  if (o.sign_ == 0) throw ValidationError("division of factored value by zero");
  if (sign_ == 0) return *this;
  sign_ *= o.sign_;
  unit_ /= o.unit_;
  for (const auto& [p, e] : o.exp_) exp_[p] -= e;
  trim();
  return *this;
}

FactoredValue FactoredValue::pow(const Rat& e) const {
  if (sign_ == 0) {
    if (e <= 0) throw ValidationError("zero to a nonpositive power");
    return zero();
  }
  if (sign_ < 0)
    throw ValidationError("rational power of a negative factored value");
  if (unit_ != 1)
    throw ValidationError("rational power with a non-unit residual factor");
  FactoredValue f;
  for (const auto& [p, ex] : exp_) {
    Rat ne = ex * e;
    if (ne != 0) f.exp_[p] = ne;
  }
  return f;
}

bool FactoredValue::has_integral_exponents() const {
  for (const auto& [p, e] : exp_)
    if (boost::multiprecision::denominator(e) != 1) return false;
  return true;
}

Rat FactoredValue::to_rational() const {
  if (sign_ == 0) return 0;
  Rat r = unit_;
  for (const auto& [p, e] : exp_) {
    if (boost::multiprecision::denominator(e) != 1)
      throw ValidationError("non-integral collapse: fractional exponent of " + p.str());
    const Int ne = boost::multiprecision::numerator(e);
    if (ne >= 0)
      r *= Rat(int_pow(p, ne.convert_to<unsigned long>()));
    else
      r /= Rat(int_pow(p, (-ne).convert_to<unsigned long>()));
  }
  return sign_ < 0 ? -r : r;
}

Int FactoredValue::to_integer() const {
  if (sign_ == 0) return 0;
  for (const auto& [p, e] : exp_)
    if (e < 0)
      throw ValidationError("non-integral collapse: negative exponent of " + p.str());
  const Rat r = to_rational();
  if (boost::multiprecision::denominator(r) != 1)
    throw ValidationError("non-integral collapse: residual is not an integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace stsrank::counting
