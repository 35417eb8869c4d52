#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "stsrank/errors.hpp"
#include "stsrank/gf.hpp"

namespace stsrank::design {

using Triple = std::array<int, 3>;

/// Steiner triple system on points 1..v in canonical form: every triple
/// sorted, block list sorted lexicographically.  Construction validates the
/// exact pair-coverage property; v = 0 and v = 1 are the degenerate systems
/// with an empty block list.
class SteinerTripleSystem {
 public:
  static SteinerTripleSystem validate(int v, std::vector<Triple> blocks);

  int v() const { return v_; }
  const std::vector<Triple>& blocks() const { return blocks_; }

  friend bool operator==(const SteinerTripleSystem&, const SteinerTripleSystem&) = default;
  friend bool operator<(const SteinerTripleSystem& a, const SteinerTripleSystem& b) {
    return a.v_ != b.v_ ? a.v_ < b.v_ : a.blocks_ < b.blocks_;
  }

 private:
  SteinerTripleSystem(int v, std::vector<Triple> blocks)
      : v_(v), blocks_(std::move(blocks)) {}
  int v_;
  std::vector<Triple> blocks_;
};

/// Latin square of order n; f(x, y) with 1-based arguments and values.
/// Flags are computed on demand, never trusted from input files.
class LatinSquare {
 public:
  static LatinSquare validate(std::vector<std::vector<int>> table);

  int n() const { return static_cast<int>(table_.size()); }
  int at(int x, int y) const { return table_[x - 1][y - 1]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool symmetric() const;
  bool totally_symmetric() const;
  bool idempotent() const;
  std::optional<int> constant_diagonal() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend bool operator<(const LatinSquare& a, const LatinSquare& b) {
    return a.table_ < b.table_;
  }

 private:
  explicit LatinSquare(std::vector<std::vector<int>> table) : table_(std::move(table)) {}
  std::vector<std::vector<int>> table_;
};

using Edge = std::pair<int, int>;  // a < b

/// Ordered partition of the edges of K_n into n-1 perfect matchings.
class OneFactorization {
 public:
  static OneFactorization validate(int n, std::vector<std::vector<Edge>> factors);

  int n() const { return n_; }
  const std::vector<std::vector<Edge>>& factors() const { return factors_; }

  friend bool operator==(const OneFactorization&, const OneFactorization&) = default;

 private:
  OneFactorization(int n, std::vector<std::vector<Edge>> factors)
      : n_(n), factors_(std::move(factors)) {}
  int n_;
  std::vector<std::vector<Edge>> factors_;
};

struct RankProfile {
  int v;
  int rank2;
  int rank3;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

// Proposition 2.1: STS <-> idempotent totally symmetric latin squares.
LatinSquare sts_to_itsls(const SteinerTripleSystem& sts);
SteinerTripleSystem itsls_to_sts(const LatinSquare& ls);

// Proposition 2.2: symmetric squares of odd order n <-> symmetric squares of
// order n+1 with constant diagonal n+1.
LatinSquare sls_lift(const LatinSquare& g);
LatinSquare sls_drop(const LatinSquare& f);

// The section-2 remark: constant-diagonal symmetric squares of even order n
// <-> ordered 1-factorizations of K_n (factor c is the color class of c).
OneFactorization sls_to_factorization(const LatinSquare& f);
LatinSquare factorization_to_sls(const OneFactorization& of);

/// Block-incidence matrix: one row per block, characteristic vectors over GF(p).
gf::GfMatrix block_matrix(const SteinerTripleSystem& sts, int p);
int design_rank(const SteinerTripleSystem& sts, int p);
RankProfile rank_profile(const SteinerTripleSystem& sts);

/// Proposition 5.1 check: true iff NOT (rank2 < v and rank3 < v-1).
bool check_rank_exclusion(const SteinerTripleSystem& sts);

/// True iff every block characteristic vector is orthogonal to every basis
/// vector of s (over s's prime, which must be 2 or 3).
bool is_orthogonal_design(const SteinerTripleSystem& sts, const gf::Subspace& s);

}  // namespace stsrank::design
