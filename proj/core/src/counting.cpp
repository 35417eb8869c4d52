#include "stsrank/counting.hpp"

#include <cassert>
#include <string>

#include "stsrank/gf.hpp"

namespace stsrank::counting {

namespace {

Int q_power_sum(unsigned q, unsigned s) {
  Int term = 0, qp = 1;
  for (unsigned i = 0; i < s; ++i) {
    term += qp;
    qp *= q;
  }
  return term;
}

unsigned long upow(unsigned base, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= base;
  return r;
}

Int exact_quotient(const Int& num, const Int& den, const char* what) {
  if (num % den != 0)
    throw ValidationError(std::string(what) + " is not integral: invalid parameters");
  return num / den;
}

}  // namespace

Int q_factorial(unsigned n, unsigned q) {
  if (q < 2) throw ValidationError("q-factorial needs q >= 2");
  Int r = 1;
  for (unsigned s = 1; s <= n; ++s) r *= q_power_sum(q, s);
  return r;
}

Int gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) throw ValidationError("gaussian binomial needs k <= n");
  return exact_quotient(q_factorial(n, q), q_factorial(k, q) * q_factorial(n - k, q),
                        "gaussian binomial");
}

Int mobius_closed(unsigned q, unsigned i) {
  Int r = int_pow(q, static_cast<unsigned long>(i) * (i - 1) / 2);
  return i % 2 ? -r : r;
}

Int mobius_recursive(unsigned q, unsigned i) {
  if (i > 6) throw GuardError("recursive Moebius coefficients guarded to i <= 6");
  std::vector<Int> mu(i + 1);
  mu[0] = 1;
  for (unsigned m = 1; m <= i; ++m) {
    // count the proper subspaces of GF(q)^m by dimension, by enumeration
    Int acc = 0;
    for (unsigned d = 0; d < m; ++d) {
      Int count = 0;
      gf::enumerate_subspaces(static_cast<int>(q), m, d,
                              [&](const gf::Subspace&) { ++count; });
      acc += count * mu[d];
    }
    mu[m] = -acc;
  }
  return mu[i];
}

unsigned max_power_dividing(unsigned n, unsigned p) {
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Int gamma3(unsigned v, unsigned i, unsigned j) {
  if (i > j) throw ValidationError("gamma needs i <= j");
  if (v == 0 || v % upow(3, j) != 0) throw ValidationError("3^j must divide v");
  const Int num = int_pow(int_factorial(v / upow(3, i)), upow(3, i));
  Int den = int_pow(3, static_cast<unsigned long>(j + i + 1) * (j - i) / 2);
  den *= int_pow(int_factorial(v / upow(3, j)), upow(3, j));
  den *= int_pow(2, j - i);
  den *= q_factorial(j - i, 3);
  return exact_quotient(num, den, "gamma");
}

Int gamma2(unsigned w, unsigned i, unsigned j) {
  if (i > j) throw ValidationError("gamma needs i <= j");
  if (w == 0 || w % (1ul << j) != 0) throw ValidationError("2^j must divide w");
  const Int num = int_pow(int_factorial(w >> i), 1ul << i);
  Int den = int_pow(2, static_cast<unsigned long>(j - i) * (j + i + 1) / 2);
  den *= int_pow(int_factorial(w >> j), 1ul << j);
  den *= q_factorial(j - i, 2);
  return exact_quotient(num, den, "gamma");
}

Int phi3(unsigned v, unsigned j, const CountRegistry& reg) {
  if (v == 0 || v % upow(3, j) != 0) throw ValidationError("3^j must divide v");
  const unsigned m = v / upow(3, j);
  const unsigned long g = upow(3, j);
  const Int psi = reg.psi(m);
  if (psi == 0) return 0;
  Int r = int_pow(psi, g);
  if (const unsigned long e = g * (g - 1) / 6; e > 0) r *= int_pow(reg.lambda(m), e);
  return r;
}

Int phi2(unsigned w, unsigned j, const CountRegistry& reg) {
  if (w == 0 || w % (1ul << j) != 0) throw ValidationError("2^j must divide w");
  const unsigned m = w >> j;
  const unsigned long g = 1ul << j;
  const Int psi = reg.psi(m - 1);
  if (psi == 0) return 0;
  Int r = psi;
  if (g - 1 > 0) r *= int_pow(reg.pi(m - 1), g - 1);
  if (const unsigned long e = (g - 1) * (g - 2) / 6; e > 0) r *= int_pow(reg.lambda(m), e);
  return r;
}

std::vector<MobiusTerm> upsilon3_terms(unsigned v, unsigned i, const CountRegistry& reg) {
  const unsigned k = max_power_dividing(v, 3);
  if (i > k) throw ValidationError("level exceeds the 3-adic valuation of v");
  std::vector<MobiusTerm> terms;
  for (unsigned j = i; j <= k; ++j) {
    MobiusTerm t{j, gamma3(v, i, j), mobius_closed(3, j - i), phi3(v, j, reg), 0};
    t.term = t.gamma * t.mobius * t.phi;
    terms.push_back(std::move(t));
  }
  return terms;
}

std::vector<MobiusTerm> upsilon2_terms(unsigned w, unsigned i, const CountRegistry& reg) {
  const unsigned k = max_power_dividing(w, 2);
  if (i > k) throw ValidationError("level exceeds the 2-adic valuation of w");
  std::vector<MobiusTerm> terms;
  for (unsigned j = i; j <= k; ++j) {
    MobiusTerm t{j, gamma2(w, i, j), mobius_closed(2, j - i), phi2(w, j, reg), 0};
    t.term = t.gamma * t.mobius * t.phi;
    terms.push_back(std::move(t));
  }
  return terms;
}

namespace {

Int sum_terms(const std::vector<MobiusTerm>& terms) {
  Int r = 0;
  for (const auto& t : terms) r += t.term;
  assert(r >= 0);
  return r;
}

}  // namespace

Int upsilon3(unsigned v, unsigned i, const CountRegistry& reg) {
  return sum_terms(upsilon3_terms(v, i, reg));
}

Int upsilon2(unsigned w, unsigned i, const CountRegistry& reg) {
  return sum_terms(upsilon2_terms(w, i, reg));
}

Int count_by_rank3(unsigned v, unsigned r3, const CountRegistry& reg) {
  if (v < 1 || (v > 1 && v % 6 != 1 && v % 6 != 3))
    throw ValidationError("no STS of order " + std::to_string(v));
  const unsigned k = max_power_dividing(v, 3);
  if (r3 + 1 > v || r3 + 1 + k < v)
    throw ValidationError("3-rank " + std::to_string(r3) + " is outside the strata of order " +
                          std::to_string(v) + " (valid: " + std::to_string(v - k - 1) + ".." +
                          std::to_string(v - 1) + ")");
  const unsigned i = v - r3 - 1;
  return gamma3(v, 0, i) * upsilon3(v, i, reg);
}

Int count_by_rank2(unsigned v, unsigned r2, const CountRegistry& reg) {
  if (v < 1 || (v > 1 && v % 6 != 1 && v % 6 != 3))
    throw ValidationError("no STS of order " + std::to_string(v));
  const unsigned w = v + 1;
  const unsigned k = max_power_dividing(w, 2);
  if (r2 > v || r2 + k < v)
    throw ValidationError("2-rank " + std::to_string(r2) + " is outside the strata of order " +
                          std::to_string(v) + " (valid: " + std::to_string(v - k) + ".." +
                          std::to_string(v) + ")");
  const unsigned i = w - r2 - 1;
  return gamma2(w, 0, i) * upsilon2(w, i, reg);
}

namespace {

using FV = FactoredValue;

FV pp(unsigned long prime, const Rat& e) { return FV::prime_power(prime, e); }

Rat frac(long num, long den) { return Rat(num, den); }

// Collapse prefactor * (sum of terms): each product must have integral
// exponents (a fractional one signals an invalid k); the final sum must be a
// nonnegative integer.
Int collapse(const FV& prefactor, const std::vector<std::pair<int, FV>>& terms) {
  Rat total = 0;
  for (const auto& [coeff, term] : terms) total += coeff * (prefactor * term).to_rational();
  if (boost::multiprecision::denominator(total) != 1)
    throw ValidationError("non-integral collapse of a corollary closed form");
  Int r = boost::multiprecision::numerator(total);
  if (r < 0) throw ValidationError("negative collapse of a corollary closed form");
  return r;
}

}  // namespace

Stratum corollary3_stratum(Corollary3Form form, unsigned k) {
  const unsigned v = form == Corollary3Form::Seven3K ? 7 * upow(3, k) : upow(3, k);
  switch (form) {
    case Corollary3Form::RankVK1:
    case Corollary3Form::Seven3K:
      return {v, v - k - 1};
    case Corollary3Form::RankVK:
      return {v, v - k};
    case Corollary3Form::RankVKP1:
      return {v, v - k + 1};
  }
  throw ValidationError("unknown corollary form");
}

Stratum corollary2_stratum(Corollary2Form form, unsigned k) {
  const unsigned w = static_cast<unsigned>(1ul << k);
  switch (form) {
    case Corollary2Form::RankWK:
      return {w - 1, w - k};
    case Corollary2Form::RankWKP1:
      return {w - 1, w - k + 1};
    case Corollary2Form::RankWKP2:
      return {w - 1, w - k + 2};
    case Corollary2Form::Ten2K:
      return {10 * w - 1, 10 * w - 1 - k};
  }
  throw ValidationError("unknown corollary form");
}

Int corollary3(Corollary3Form form, unsigned k) {
  switch (form) {
    case Corollary3Form::RankVK1: {
      const unsigned v = upow(3, k);
      FV pre = FV::from_factorial(v) /
               (pp(3, frac(static_cast<long>(k) * (k + 1), 2)) * pp(2, k) *
                FV::from_q_factorial(k, 3));
      return collapse(pre, {{1, FV{}}});
    }
    case Corollary3Form::RankVK: {
      if (k < 1) throw ValidationError("form needs k >= 1");
      const long v = static_cast<long>(upow(3, k));
      FV pre = FV::from_factorial(v) /
               (pp(2, k) * pp(3, frac(static_cast<long>(k) * (k + 1), 2)) *
                FV::from_q_factorial(k - 1, 3));
      FV t = pp(2, frac(v * v, 27) - frac(4 * v, 9) + 1) *
             pp(3, frac(v * v, 54) - frac(7 * v, 18) + static_cast<long>(k));
      return collapse(pre, {{1, t}, {-1, FV{}}});
    }
    case Corollary3Form::RankVKP1: {
      if (k < 2) throw ValidationError("form needs k >= 2");
      const long v = static_cast<long>(upow(3, k));
      const long kk = static_cast<long>(k);
      FV pre = FV::from_factorial(v) /
               (pp(2, kk + 2) * pp(3, frac(kk * (kk + 1), 2) - 1) *
                FV::from_q_factorial(k - 2, 3));
      // Lambda_9 as the paper factors it
      FV c = pp(2, 35) * pp(3, 8) * pp(5, 2) * pp(7, 2) * pp(5231, 1) * pp(3824477, 1);
      // The paper's display has 3^{v/3-2k+1} in this denominator; that term is
      // exactly 3x the value Theorem 3.1 yields.  The exponent below is the
      // one the theorem derivation produces.
      FV t1 = c.pow(frac(v * (v - 9), 486)) /
              (pp(2, frac(4 * v, 9) - 4) * pp(3, frac(v, 3) - 2 * kk + 2));
      FV t2 = pp(2, frac(v * v, 27) - frac(4 * v, 9) + 3) *
              pp(3, frac(v * v, 54) - frac(7 * v, 18) + kk - 1);
      return collapse(pre, {{1, t1}, {-1, t2}, {1, FV{}}});
    }
    case Corollary3Form::Seven3K: {
      const unsigned v = 7 * upow(3, k);
      const unsigned long g = upow(3, k);
      FV pre = FV::from_factorial(v) /
               (pp(2, k) * pp(3, frac(static_cast<long>(k) * (k + 1), 2)) *
                FV::from_integer(168).pow(g) * FV::from_q_factorial(k, 3));
      // Lambda_7 = 2^18 3^5 5^3 7 1103
      FV l7 = pp(2, 18) * pp(3, 5) * pp(5, 3) * pp(7, 1) * pp(1103, 1);
      FV t = l7.pow(frac(static_cast<long>(g) * (static_cast<long>(g) - 1), 6));
      return collapse(pre, {{1, t}});
    }
  }
  throw ValidationError("unknown corollary form");
}

Int corollary2(Corollary2Form form, unsigned k) {
  switch (form) {
    case Corollary2Form::RankWK: {
      if (k < 1) throw ValidationError("form needs k >= 1");
      const long w = static_cast<long>(1ul << k);
      const long kk = static_cast<long>(k);
      FV pre = FV::from_factorial(w) /
               (pp(2, frac(kk * (kk + 1), 2)) * FV::from_q_factorial(k - 1, 2));
      FV t = pp(2, frac(w * w, 24) - frac(3 * w, 4) + kk + frac(1, 3));
      return collapse(pre, {{1, t}, {-1, FV{}}});
    }
    case Corollary2Form::RankWKP1: {
      if (k < 2) throw ValidationError("form needs k >= 2");
      const long w = static_cast<long>(1ul << k);
      const long kk = static_cast<long>(k);
      FV pre = FV::from_factorial(w) /
               (pp(3, 1) * pp(2, frac((kk + 2) * (kk - 1), 2)) *
                FV::from_q_factorial(k - 2, 2));
      FV t1 = pp(3, frac(w * w, 48) - frac(w, 4) + frac(2, 3)) *
              pp(2, frac(w * w, 16) - frac(5 * w, 4) + 2 * kk - 1);
      FV t2 = pp(3, 1) * pp(2, frac(w * w, 24) - frac(3 * w, 4) + kk - frac(2, 3));
      return collapse(pre, {{1, t1}, {-1, t2}, {1, FV{}}});
    }
    case Corollary2Form::RankWKP2: {
      if (k < 3) throw ValidationError("form needs k >= 3");
      const long w = static_cast<long>(1ul << k);
      const long kk = static_cast<long>(k);
      FV pre = FV::from_factorial(w) /
               (FV::from_integer(21) * pp(2, frac(kk * (kk + 1), 2) - 3) *
                FV::from_q_factorial(k - 3, 2));
      // Lambda_8 = 2^28 3^5 5^2 7^2 1361291
      FV l8 = pp(2, 28) * pp(3, 5) * pp(5, 2) * pp(7, 2) * pp(1361291, 1);
      FV t1 = FV::from_integer(780).pow(frac(w, 8) - 1) *
              l8.pow(frac(w * w, 384) - frac(w, 16) + frac(1, 3)) * pp(2, 3 * kk - 12);
      FV t2 = FV::from_integer(7) *
              pp(2, frac(w * w, 16) - frac(5 * w, 4) + 2 * kk - 3) *
              pp(3, frac(w * w, 48) - frac(w, 4) + frac(2, 3));
      FV t3 = FV::from_integer(7) *
              pp(2, frac(w * w, 24) - frac(3 * w, 4) - frac(5, 3) + kk);
      return collapse(pre, {{1, t1}, {-1, t2}, {1, t3}, {-1, FV{}}});
    }
    case Corollary2Form::Ten2K: {
      const long w = static_cast<long>(1ul << k);
      const long kk = static_cast<long>(k);
      FV pre = FV::from_factorial(10 * w) /
               (pp(2, frac(kk * (kk + 1), 2) + 5) * FV::from_integer(135) *
                FV::from_q_factorial(k, 2));
      // Lambda_10 = 2^43 3^10 5^4 7^2 31 37 547135293937
      FV l10 = pp(2, 43) * pp(3, 10) * pp(5, 4) * pp(7, 2) * pp(31, 1) * pp(37, 1) *
               pp(547135293937ul, 1);
      FV t = FV::from_integer(122556672).pow(w - 1) *
             l10.pow(frac((w - 1) * (w - 2), 6));
      return collapse(pre, {{1, t}});
    }
  }
  throw ValidationError("unknown corollary form");
}

}  // namespace stsrank::counting
