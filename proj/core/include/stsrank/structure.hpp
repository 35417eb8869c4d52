#pragma once

#include <array>
#include <vector>

#include "stsrank/design.hpp"
#include "stsrank/gf.hpp"

namespace stsrank::structure {

/// Point groups induced by the column patterns of an admissible dual
/// subspace, plus the group triples whose patterns sum to zero.  Groups are
/// ordered deterministically: over GF(2) the zero-pattern group comes first,
/// then ascending minimum point (which equals ascending pattern value for the
/// canonical matrices of Lemmas 3.1/4.1).
struct GroupPartition {
  int p;
  unsigned j;
  int order;                                      // v (GF3) or w-1 (GF2)
  std::vector<std::vector<int>> groups;           // point lists, ascending
  std::vector<std::array<int, 3>> rule_triples;   // 0-based group indices, sorted
};

/// Verifies the Lemma 3.1/4.1 column-multiset structure (not assumed).
/// Throws ValidationError if the subspace cannot be dual to any STS.
GroupPartition partition_from_dual(const gf::Subspace& s);

/// GF(3) ingredients: one STS(v/3^j) per group and one latin square of order
/// v/3^j per rule triple.  Orientation per triple (a < b < c by group order):
/// a indexes rows, b columns, c values.
struct Ingredients3 {
  std::vector<design::SteinerTripleSystem> sts_parts;
  std::vector<design::LatinSquare> latin;
};

/// GF(2) ingredients: one STS(w/2^j - 1) on the zero group, one symmetric
/// latin square of order w/2^j - 1 (dropped form) per nonzero group, and one
/// latin square of order w/2^j per rule triple of nonzero groups.
struct Ingredients2 {
  design::SteinerTripleSystem zero_sts;
  std::vector<design::LatinSquare> symmetric;
  std::vector<design::LatinSquare> latin;
};

design::SteinerTripleSystem compose3(const GroupPartition& gp, const Ingredients3& ing);
Ingredients3 decompose3(const design::SteinerTripleSystem& sts, const gf::Subspace& s);

design::SteinerTripleSystem compose2(const GroupPartition& gp, const Ingredients2& ing);
Ingredients2 decompose2(const design::SteinerTripleSystem& sts, const gf::Subspace& s);

}  // namespace stsrank::structure
