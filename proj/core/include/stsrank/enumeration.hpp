#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "stsrank/bigint.hpp"
#include "stsrank/design.hpp"
#include "stsrank/gf.hpp"

namespace stsrank::enumeration {

enum class LatinConstraint { None, Symmetric, IdempotentTotallySymmetric };

struct LatinOptions {
  LatinConstraint constraint = LatinConstraint::None;
  std::optional<int> constant_diagonal;
};

/// Streams every qualifying square once, in row-major backtracking order.
/// Guarded to n <= 7.
void enum_latin(int n, const LatinOptions& opts,
                const std::function<void(const design::LatinSquare&)>& fn);
/// Count without materializing squares; the search tree is split on the first
/// decision level across workers.
std::uint64_t enum_latin_count(int n, const LatinOptions& opts, unsigned threads = 1);

std::uint64_t enum_symmetric_latin_count(int n, unsigned threads = 1);

/// Streams every labeled STS(v) exactly once (branching on the least
/// uncovered pair).  Guarded to v in {0, 1, 3, 7, 9}.
void enum_sts(int v, const std::function<void(const design::SteinerTripleSystem&)>& fn);
std::uint64_t enum_sts_count(int v, unsigned threads = 1);

/// Unordered 1-factorizations of K_n; n even, guarded to n <= 8.  Factors are
/// streamed in canonical order (ascending partner of vertex 1).
void enum_one_factorizations(int n,
                             const std::function<void(const design::OneFactorization&)>& fn);
std::uint64_t enum_one_factorizations_count(int n);

struct CensusReport {
  int order;
  int p;
  std::map<int, Int> histogram;  // rank -> count
  Int total;
  double seconds;
};

/// Full p-rank histogram over all labeled STS(v).
CensusReport census_rank(int v, int p, unsigned threads = 1);

/// All STS orthogonal to an admissible subspace, generated by composing every
/// ingredient tuple (Lemmas 3.3/4.3).  Throws GuardError when the ingredient
/// space exceeds the budget.
std::vector<design::SteinerTripleSystem> enum_orthogonal_sts(
    const gf::Subspace& s, std::size_t budget = 1'000'000);

}  // namespace stsrank::enumeration
