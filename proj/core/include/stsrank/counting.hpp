#pragma once

#include <vector>

#include "stsrank/bigint.hpp"
#include "stsrank/errors.hpp"
#include "stsrank/factored.hpp"
#include "stsrank/registry.hpp"

namespace stsrank::counting {

/// [n]_q! = prod_{s=1..n} (1 + q + ... + q^{s-1})
Int q_factorial(unsigned n, unsigned q);

/// Number of k-dimensional subspaces of GF(q)^n.
Int gaussian_binomial(unsigned n, unsigned k, unsigned q);

/// mu_i = (-1)^i q^{i(i-1)/2}
Int mobius_closed(unsigned q, unsigned i);
/// Solves the defining recursion by explicit subspace enumeration of GF(q)^i;
/// guarded to i <= 6.  Must agree with mobius_closed.
Int mobius_recursive(unsigned q, unsigned i);

/// Number of level-j admissible GF(3) subspaces containing a fixed level-i
/// one (so gamma3(v, 0, j) counts them all).  Exact rational evaluation with
/// an integrality assertion.
Int gamma3(unsigned v, unsigned i, unsigned j);
/// GF(2) analog on w = v + 1.
Int gamma2(unsigned w, unsigned i, unsigned j);

/// Number of STS(v) orthogonal to a fixed level-j admissible GF(3) subspace:
/// Psi_{v/3^j}^{3^j} * Lambda_{v/3^j}^{3^j(3^j-1)/6}.
Int phi3(unsigned v, unsigned j, const CountRegistry& reg);
/// GF(2) analog: Psi_{w/2^j-1} * Pi_{w/2^j-1}^{2^j-1} * Lambda_{w/2^j}^{(2^j-1)(2^j-2)/6}.
Int phi2(unsigned w, unsigned j, const CountRegistry& reg);

/// One Moebius-inversion summand of the Upsilon sums: gamma * mu * phi.
struct MobiusTerm {
  unsigned j;
  Int gamma;
  Int mobius;
  Int phi;
  Int term;
};

std::vector<MobiusTerm> upsilon3_terms(unsigned v, unsigned i, const CountRegistry& reg);
std::vector<MobiusTerm> upsilon2_terms(unsigned w, unsigned i, const CountRegistry& reg);

/// Number of STS(v) whose GF(3) dual space is exactly a fixed level-i
/// admissible subspace.
Int upsilon3(unsigned v, unsigned i, const CountRegistry& reg);
Int upsilon2(unsigned w, unsigned i, const CountRegistry& reg);

/// Total number of STS(v) of 3-rank r3 = v - i - 1: gamma3(v,0,i) * upsilon3(v,i).
Int count_by_rank3(unsigned v, unsigned r3, const CountRegistry& reg);
/// Total number of STS(v) of 2-rank r2 = (v+1) - i - 1.
Int count_by_rank2(unsigned v, unsigned r2, const CountRegistry& reg);

unsigned max_power_dividing(unsigned n, unsigned p);

// Closed forms for whole families, evaluated symbolically as prime-power
// products with rational exponents and collapsed to exact integers.
enum class Corollary3Form {
  RankVK1,   // v = 3^k, 3-rank v-k-1
  RankVK,    // v = 3^k, 3-rank v-k   (k >= 1)
  RankVKP1,  // v = 3^k, 3-rank v-k+1 (k >= 2)
  Seven3K,   // v = 7*3^k, 3-rank v-k-1
};
enum class Corollary2Form {
  RankWK,    // w = 2^k, 2-rank w-k   (k >= 1)
  RankWKP1,  // w = 2^k, 2-rank w-k+1 (k >= 2)
  RankWKP2,  // w = 2^k, 2-rank w-k+2 (k >= 3)
  Ten2K,     // v = 10*2^k - 1, 2-rank v-k
};

Int corollary3(Corollary3Form form, unsigned k);
Int corollary2(Corollary2Form form, unsigned k);

/// Order and rank of the stratum a corollary form describes at parameter k.
struct Stratum {
  unsigned v;
  unsigned rank;
};
Stratum corollary3_stratum(Corollary3Form form, unsigned k);
Stratum corollary2_stratum(Corollary2Form form, unsigned k);

}  // namespace stsrank::counting
