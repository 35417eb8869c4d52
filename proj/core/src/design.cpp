#include "stsrank/design.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace stsrank::design {

namespace {

std::string triple_str(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "}";
}

// Index of pair {x, y}, 1 <= x < y <= v, into a flat table of v(v-1)/2 cells.
std::size_t pair_index(int v, int x, int y) {
  return static_cast<std::size_t>(x - 1) * (2 * v - x) / 2 + (y - x - 1);
}

}  // namespace

SteinerTripleSystem SteinerTripleSystem::validate(int v, std::vector<Triple> blocks) {
  if (v < 0) throw ValidationError("order must be nonnegative");
  if (v <= 1) {
    if (!blocks.empty())
      throw ValidationError("degenerate system of order " + std::to_string(v) +
                            " must have no blocks");
    return SteinerTripleSystem(v, {});
  }
  if (v % 6 != 1 && v % 6 != 3)
    throw ValidationError("no STS(" + std::to_string(v) + "): order must be 1 or 3 mod 6");

  const std::size_t expected = static_cast<std::size_t>(v) * (v - 1) / 6;
  if (blocks.size() != expected)
    throw ValidationError("wrong block count: got " + std::to_string(blocks.size()) +
                          ", expected " + std::to_string(expected));

  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (b[0] < 1 || b[2] > v)
      throw ValidationError("point out of range in block " + triple_str(b));
    if (b[0] == b[1] || b[1] == b[2])
      throw ValidationError("repeated point in block " + triple_str(b));
  }
  std::sort(blocks.begin(), blocks.end());

  std::vector<std::uint8_t> covered(static_cast<std::size_t>(v) * (v - 1) / 2, 0);
  for (const auto& b : blocks) {
    const int pts[3][2] = {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
    for (auto [x, y] : pts) {
      auto& c = covered[pair_index(v, x, y)];
      if (c)
        throw ValidationError("pair {" + std::to_string(x) + "," + std::to_string(y) +
                              "} covered twice");
      c = 1;
    }
  }
  // expected block count + no repeats implies full coverage, but report the
  // first uncovered pair if an inconsistent list slips through
  for (int x = 1; x < v; ++x)
    for (int y = x + 1; y <= v; ++y)
      if (!covered[pair_index(v, x, y)])
        throw ValidationError("pair {" + std::to_string(x) + "," + std::to_string(y) +
                              "} uncovered");
  return SteinerTripleSystem(v, std::move(blocks));
}

LatinSquare LatinSquare::validate(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("latin square table must be square");
  std::vector<char> seen(n + 1);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 1 || v > n) throw ValidationError("latin square entry out of range");
      if (seen[v]++) throw ValidationError("row " + std::to_string(r + 1) +
                                           " repeats value " + std::to_string(v));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = table[r][c];
      if (seen[v]++) throw ValidationError("column " + std::to_string(c + 1) +
                                           " repeats value " + std::to_string(v));
    }
  }
  return LatinSquare(std::move(table));
}

bool LatinSquare::symmetric() const {
  const int m = n();
  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y)
      if (at(x, y) != at(y, x)) return false;
  return true;
}

bool LatinSquare::totally_symmetric() const {
  const int m = n();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      const int z = at(x, y);
      if (at(y, x) != z || at(x, z) != y || at(z, x) != y || at(y, z) != x ||
          at(z, y) != x)
        return false;
    }
  return true;
}

bool LatinSquare::idempotent() const {
  for (int x = 1; x <= n(); ++x)
    if (at(x, x) != x) return false;
  return true;
}

std::optional<int> LatinSquare::constant_diagonal() const {
  if (n() == 0) return std::nullopt;
  const int d = at(1, 1);
  for (int x = 2; x <= n(); ++x)
    if (at(x, x) != d) return std::nullopt;
  return d;
}

OneFactorization OneFactorization::validate(int n, std::vector<std::vector<Edge>> factors) {
  if (n < 2 || n % 2 != 0)
    throw ValidationError("1-factorization needs an even order of at least 2");
  if (factors.size() != static_cast<std::size_t>(n - 1))
    throw ValidationError("expected " + std::to_string(n - 1) + " factors");
  std::set<Edge> all_edges;
  for (auto& f : factors) {
    if (f.size() != static_cast<std::size_t>(n / 2))
      throw ValidationError("factor is not a perfect matching");
    std::vector<char> used(n + 1, 0);
    for (auto& [a, b] : f) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > n || a == b) throw ValidationError("edge out of range");
      if (used[a]++ || used[b]++) throw ValidationError("factor reuses a vertex");
      if (!all_edges.insert({a, b}).second)
        throw ValidationError("edge repeated across factors");
    }
    std::sort(f.begin(), f.end());
  }
  // n-1 matchings of n/2 distinct edges cover all n(n-1)/2 edges
  return OneFactorization(n, std::move(factors));
}

LatinSquare sts_to_itsls(const SteinerTripleSystem& sts) {
  const int n = sts.v();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (int x = 1; x <= n; ++x) t[x - 1][x - 1] = x;
  for (const auto& b : sts.blocks()) {
    const auto [x, y, z] = b;
    t[x - 1][y - 1] = t[y - 1][x - 1] = z;
    t[x - 1][z - 1] = t[z - 1][x - 1] = y;
    t[y - 1][z - 1] = t[z - 1][y - 1] = x;
  }
  return LatinSquare::validate(std::move(t));
}

SteinerTripleSystem itsls_to_sts(const LatinSquare& ls) {
  if (!ls.idempotent() || !ls.totally_symmetric())
    throw ValidationError("square is not idempotent totally symmetric");
  const int n = ls.n();
  std::set<Triple> blocks;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      Triple t{x, y, ls.at(x, y)};
      std::sort(t.begin(), t.end());
      blocks.insert(t);
    }
  return SteinerTripleSystem::validate(n, {blocks.begin(), blocks.end()});
}

LatinSquare sls_lift(const LatinSquare& g) {
  const int n = g.n();
  if (n % 2 == 0) throw ValidationError("lift needs an odd order");
  if (!g.symmetric()) throw ValidationError("lift needs a symmetric square");
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(n + 1, 0));
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) t[x - 1][y - 1] = g.at(x, y);
    t[x - 1][x - 1] = n + 1;
    t[x - 1][n] = t[n][x - 1] = g.at(x, x);
  }
  t[n][n] = n + 1;
  return LatinSquare::validate(std::move(t));
}

LatinSquare sls_drop(const LatinSquare& f) {
  const int m = f.n();
  if (m < 2 || m % 2 != 0) throw ValidationError("drop needs an even order");
  if (!f.symmetric()) throw ValidationError("drop needs a symmetric square");
  if (f.constant_diagonal() != m)
    throw ValidationError("drop needs constant diagonal equal to the order");
  std::vector<std::vector<int>> t(m - 1, std::vector<int>(m - 1, 0));
  for (int x = 1; x < m; ++x) {
    for (int y = 1; y < m; ++y) t[x - 1][y - 1] = f.at(x, y);
    t[x - 1][x - 1] = f.at(x, m);
  }
  return LatinSquare::validate(std::move(t));
}

OneFactorization sls_to_factorization(const LatinSquare& f) {
  const int n = f.n();
  if (n < 2 || n % 2 != 0) throw ValidationError("needs an even order");
  if (!f.symmetric() || f.constant_diagonal() != n)
    throw ValidationError("needs a symmetric square with constant diagonal n");
  std::vector<std::vector<Edge>> factors(n - 1);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      factors[f.at(x, y) - 1].push_back({x, y});  // color n never appears off-diagonal
  return OneFactorization::validate(n, std::move(factors));
}

LatinSquare factorization_to_sls(const OneFactorization& of) {
  const int n = of.n();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (int x = 1; x <= n; ++x) t[x - 1][x - 1] = n;
  for (int c = 1; c < n; ++c)
    for (const auto& [a, b] : of.factors()[c - 1])
      t[a - 1][b - 1] = t[b - 1][a - 1] = c;
  return LatinSquare::validate(std::move(t));
}

gf::GfMatrix block_matrix(const SteinerTripleSystem& sts, int p) {
  if (sts.v() < 1 || sts.blocks().empty())
    throw ValidationError("block matrix needs a system with at least one block");
  gf::GfMatrix m(p, sts.blocks().size(), sts.v());
  for (std::size_t r = 0; r < sts.blocks().size(); ++r)
    for (int pt : sts.blocks()[r]) m.set(r, pt - 1, 1);
  return m;
}

int design_rank(const SteinerTripleSystem& sts, int p) {
  if (sts.blocks().empty()) return 0;
  return rank(block_matrix(sts, p));
}

RankProfile rank_profile(const SteinerTripleSystem& sts) {
  return RankProfile{sts.v(), design_rank(sts, 2), design_rank(sts, 3)};
}

bool check_rank_exclusion(const SteinerTripleSystem& sts) {
  if (sts.v() <= 3)
    throw ValidationError("the rank exclusion applies to orders above 3");
  const RankProfile rp = rank_profile(sts);
  return !(rp.rank2 < rp.v && rp.rank3 < rp.v - 1);
}

bool is_orthogonal_design(const SteinerTripleSystem& sts, const gf::Subspace& s) {
  if (static_cast<std::size_t>(sts.v()) != s.ambient_dim())
    throw ValidationError("order does not match the subspace's ambient dimension");
  const int p = s.p();
  if (p != 2 && p != 3)
    throw ValidationError("orthogonality test is defined over GF(2) and GF(3)");
  const auto& basis = s.basis();
  for (std::size_t r = 0; r < basis.nrows(); ++r)
    for (const auto& b : sts.blocks())
      if ((basis.at(r, b[0] - 1) + basis.at(r, b[1] - 1) + basis.at(r, b[2] - 1)) % p)
        return false;
  return true;
}

}  // namespace stsrank::design
