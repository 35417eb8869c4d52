#include "stsrank/structure.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

namespace stsrank::structure {

using design::LatinSquare;
using design::SteinerTripleSystem;
using design::Triple;

namespace {

std::vector<int> column_of(const gf::GfMatrix& m, std::size_t c) {
  std::vector<int> col(m.nrows());
  for (std::size_t r = 0; r < m.nrows(); ++r) col[r] = m.at(r, c);
  return col;
}

bool is_zero(const std::vector<int>& col) {
  return std::all_of(col.begin(), col.end(), [](int e) { return e == 0; });
}

std::vector<int> column_sum(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % p;
  return s;
}

}  // namespace

GroupPartition partition_from_dual(const gf::Subspace& s) {
  const int p = s.p();
  const auto n = s.ambient_dim();
  if (p != 3 && p != 2)
    throw ValidationError("group partitions are defined over GF(2) and GF(3)");

  GroupPartition gp;
  gp.p = p;
  gp.order = static_cast<int>(n);

  // Points sharing a basis column belong to one group; grouping is invariant
  // under the choice of generator matrix.
  std::map<std::vector<int>, std::vector<int>> by_column;
  for (std::size_t c = 0; c < n; ++c)
    by_column[column_of(s.basis(), c)].push_back(static_cast<int>(c) + 1);

  if (p == 3) {
    if (s.dim() < 1) throw ValidationError("a GF(3) dual subspace must contain the all-one vector");
    std::vector<int> ones(n, 1);
    if (!s.contains(ones))
      throw ValidationError("subspace does not contain the all-one vector; "
                            "it cannot be dual to any STS");
    gp.j = static_cast<unsigned>(s.dim()) - 1;
    unsigned long expected_groups = 1;
    for (unsigned t = 0; t < gp.j; ++t) expected_groups *= 3;
    if (by_column.size() != expected_groups ||
        n % expected_groups != 0)
      throw ValidationError("subspace lacks the dual column structure of an STS");
    const std::size_t group_size = n / expected_groups;
    for (const auto& [col, pts] : by_column) {
      if (pts.size() != group_size)
        throw ValidationError("subspace lacks the dual column structure of an STS");
      gp.groups.push_back(pts);
    }
  } else {
    gp.j = static_cast<unsigned>(s.dim());
    const unsigned long w = n + 1;
    const unsigned long cells = 1ul << gp.j;
    if (w % cells != 0)
      throw ValidationError("subspace lacks the dual column structure of an STS");
    const std::size_t run = w / cells;

    std::vector<int> zero_group;  // may be empty when w = 2^j
    std::vector<std::vector<int>> nonzero_groups;
    for (const auto& [col, pts] : by_column) {
      if (gp.j > 0 && is_zero(col)) {
        if (pts.size() != run - 1)
          throw ValidationError("subspace lacks the dual column structure of an STS");
        zero_group = pts;
      } else if (gp.j == 0) {
        zero_group = pts;  // trivial subspace: everything is the zero group
      } else {
        if (pts.size() != run)
          throw ValidationError("subspace lacks the dual column structure of an STS");
        nonzero_groups.push_back(pts);
      }
    }
    if (nonzero_groups.size() != cells - 1)
      throw ValidationError("subspace lacks the dual column structure of an STS");
    gp.groups.push_back(zero_group);
    for (auto& g : nonzero_groups) gp.groups.push_back(std::move(g));
  }

  // map-of-columns order is deterministic but not the published one: order
  // groups by minimum point (zero group pinned first over GF(2))
  const std::size_t fixed = p == 2 ? 1 : 0;
  std::sort(gp.groups.begin() + fixed, gp.groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  // rule triples from pattern arithmetic on representative columns
  std::vector<std::vector<int>> rep;
  for (const auto& g : gp.groups)
    rep.push_back(g.empty() ? std::vector<int>(s.dim(), 0)
                            : column_of(s.basis(), g.front() - 1));
  const std::size_t first = p == 2 ? 1 : 0;  // GF(2) triples avoid the zero group
  for (std::size_t a = first; a < gp.groups.size(); ++a)
    for (std::size_t b = a + 1; b < gp.groups.size(); ++b)
      for (std::size_t c = b + 1; c < gp.groups.size(); ++c) {
        auto sum = column_sum(column_sum(rep[a], rep[b], p), rep[c], p);
        if (is_zero(sum))
          gp.rule_triples.push_back({static_cast<int>(a), static_cast<int>(b),
                                     static_cast<int>(c)});
      }
  return gp;
}

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

// index of point pt within its ascending group (1-based), -1 if absent
int local_index(const std::vector<int>& group, int pt) {
  auto it = std::lower_bound(group.begin(), group.end(), pt);
  if (it == group.end() || *it != pt) return -1;
  return static_cast<int>(it - group.begin()) + 1;
}

std::vector<int> group_of_point(const GroupPartition& gp) {
  std::vector<int> g(gp.order + 1, -1);
  for (std::size_t i = 0; i < gp.groups.size(); ++i)
    for (int pt : gp.groups[i]) g[pt] = static_cast<int>(i);
  return g;
}

}  // namespace

SteinerTripleSystem compose3(const GroupPartition& gp, const Ingredients3& ing) {
  require(gp.p == 3, "GF(3) partition required");
  require(ing.sts_parts.size() == gp.groups.size(), "need one STS per group");
  require(ing.latin.size() == gp.rule_triples.size(), "need one latin square per rule triple");
  const int m = static_cast<int>(gp.groups.front().size());
  for (const auto& s : ing.sts_parts) require(s.v() == m, "group STS has the wrong order");
  for (const auto& f : ing.latin) require(f.n() == m, "latin square has the wrong order");

  std::vector<Triple> blocks;
  for (std::size_t g = 0; g < gp.groups.size(); ++g)
    for (const auto& b : ing.sts_parts[g].blocks())
      blocks.push_back({gp.groups[g][b[0] - 1], gp.groups[g][b[1] - 1],
                        gp.groups[g][b[2] - 1]});
  for (std::size_t t = 0; t < gp.rule_triples.size(); ++t) {
    const auto [a, b, c] = gp.rule_triples[t];
    const LatinSquare& f = ing.latin[t];
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y)
        blocks.push_back({gp.groups[a][x - 1], gp.groups[b][y - 1],
                          gp.groups[c][f.at(x, y) - 1]});
  }
  return SteinerTripleSystem::validate(gp.order, std::move(blocks));
}

Ingredients3 decompose3(const SteinerTripleSystem& sts, const gf::Subspace& s) {
  if (!design::is_orthogonal_design(sts, s))
    throw ValidationError("system is not orthogonal to the subspace");
  const GroupPartition gp = partition_from_dual(s);
  const auto grp = group_of_point(gp);
  const int m = static_cast<int>(gp.groups.front().size());

  std::map<std::array<int, 3>, std::size_t> triple_slot;
  for (std::size_t t = 0; t < gp.rule_triples.size(); ++t)
    triple_slot[gp.rule_triples[t]] = t;

  std::vector<std::vector<Triple>> group_blocks(gp.groups.size());
  std::vector<std::vector<std::vector<int>>> cells(
      gp.rule_triples.size(), std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));

  for (const auto& blk : sts.blocks()) {
    const int ga = grp[blk[0]], gb = grp[blk[1]], gc = grp[blk[2]];
    if (ga == gb && gb == gc) {
      group_blocks[ga].push_back({local_index(gp.groups[ga], blk[0]),
                                  local_index(gp.groups[ga], blk[1]),
                                  local_index(gp.groups[ga], blk[2])});
      continue;
    }
    assert(ga != gb && gb != gc && ga != gc &&
           "orthogonal system cannot split a block 2+1 across groups");
    std::array<int, 3> key{ga, gb, gc};
    std::array<int, 3> pts = blk;
    // sort group indices and carry the points along
    for (int i = 0; i < 2; ++i)
      for (int jj = 0; jj < 2 - i; ++jj)
        if (key[jj] > key[jj + 1]) {
          std::swap(key[jj], key[jj + 1]);
          std::swap(pts[jj], pts[jj + 1]);
        }
    auto slot = triple_slot.find(key);
    assert(slot != triple_slot.end() && "block spans a non-rule group triple");
    const int x = local_index(gp.groups[key[0]], pts[0]);
    const int y = local_index(gp.groups[key[1]], pts[1]);
    const int z = local_index(gp.groups[key[2]], pts[2]);
    assert(cells[slot->second][x - 1][y - 1] == 0);
    cells[slot->second][x - 1][y - 1] = z;
  }

  Ingredients3 ing;
  for (std::size_t g = 0; g < gp.groups.size(); ++g)
    ing.sts_parts.push_back(SteinerTripleSystem::validate(m, std::move(group_blocks[g])));
  for (auto& table : cells) ing.latin.push_back(LatinSquare::validate(std::move(table)));
  return ing;
}

SteinerTripleSystem compose2(const GroupPartition& gp, const Ingredients2& ing) {
  require(gp.p == 2, "GF(2) partition required");
  const std::size_t nonzero = gp.groups.size() - 1;
  require(ing.symmetric.size() == nonzero, "need one symmetric square per nonzero group");
  require(ing.latin.size() == gp.rule_triples.size(), "need one latin square per rule triple");
  const int zero_size = static_cast<int>(gp.groups.front().size());
  const int m = nonzero ? static_cast<int>(gp.groups[1].size()) : zero_size + 1;
  require(ing.zero_sts.v() == zero_size, "zero-group STS has the wrong order");
  for (const auto& g : ing.symmetric) {
    require(g.n() == m - 1, "symmetric square has the wrong order");
    require(g.symmetric(), "stored square is not symmetric");
  }
  for (const auto& f : ing.latin) require(f.n() == m, "latin square has the wrong order");

  const auto& zero_group = gp.groups.front();
  std::vector<Triple> blocks;
  for (const auto& b : ing.zero_sts.blocks())
    blocks.push_back({zero_group[b[0] - 1], zero_group[b[1] - 1], zero_group[b[2] - 1]});
  for (std::size_t g = 1; g < gp.groups.size(); ++g) {
    // pairs within the group take their third point in the zero group, via
    // the lifted constant-diagonal square (off-diagonal values stay below m)
    const LatinSquare f = design::sls_lift(ing.symmetric[g - 1]);
    const auto& grp_pts = gp.groups[g];
    for (int x = 1; x <= m; ++x)
      for (int y = x + 1; y <= m; ++y)
        blocks.push_back({grp_pts[x - 1], grp_pts[y - 1], zero_group[f.at(x, y) - 1]});
  }
  for (std::size_t t = 0; t < gp.rule_triples.size(); ++t) {
    const auto [a, b, c] = gp.rule_triples[t];
    const LatinSquare& f = ing.latin[t];
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y)
        blocks.push_back({gp.groups[a][x - 1], gp.groups[b][y - 1],
                          gp.groups[c][f.at(x, y) - 1]});
  }
  return SteinerTripleSystem::validate(gp.order, std::move(blocks));
}

Ingredients2 decompose2(const SteinerTripleSystem& sts, const gf::Subspace& s) {
  if (!design::is_orthogonal_design(sts, s))
    throw ValidationError("system is not orthogonal to the subspace");
  const GroupPartition gp = partition_from_dual(s);
  const auto grp = group_of_point(gp);
  const std::size_t nonzero = gp.groups.size() - 1;
  const int zero_size = static_cast<int>(gp.groups.front().size());
  const int m = nonzero ? static_cast<int>(gp.groups[1].size()) : zero_size + 1;

  std::map<std::array<int, 3>, std::size_t> triple_slot;
  for (std::size_t t = 0; t < gp.rule_triples.size(); ++t)
    triple_slot[gp.rule_triples[t]] = t;

  std::vector<Triple> zero_blocks;
  std::vector<std::vector<std::vector<int>>> sym_cells(
      nonzero, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
  std::vector<std::vector<std::vector<int>>> cells(
      gp.rule_triples.size(), std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));

  for (const auto& blk : sts.blocks()) {
    int ga = grp[blk[0]], gb = grp[blk[1]], gc = grp[blk[2]];
    if (ga == 0 && gb == 0 && gc == 0) {
      zero_blocks.push_back({local_index(gp.groups[0], blk[0]),
                             local_index(gp.groups[0], blk[1]),
                             local_index(gp.groups[0], blk[2])});
      continue;
    }
    if (ga == gb || gb == gc || ga == gc) {
      // two points in one nonzero group, third in the zero group
      int pair_group, px, py, zero_pt;
      if (ga == gb) {
        pair_group = ga; px = blk[0]; py = blk[1]; zero_pt = blk[2];
      } else if (gb == gc) {
        pair_group = gb; px = blk[1]; py = blk[2]; zero_pt = blk[0];
      } else {
        pair_group = ga; px = blk[0]; py = blk[2]; zero_pt = blk[1];
      }
      assert(pair_group > 0 && grp[zero_pt] == 0 &&
             "orthogonal system cannot pair points outside a nonzero group");
      const int x = local_index(gp.groups[pair_group], px);
      const int y = local_index(gp.groups[pair_group], py);
      const int z = local_index(gp.groups[0], zero_pt);
      auto& table = sym_cells[pair_group - 1];
      assert(table[x - 1][y - 1] == 0);
      table[x - 1][y - 1] = table[y - 1][x - 1] = z;
      continue;
    }
    std::array<int, 3> key{ga, gb, gc};
    std::array<int, 3> pts = blk;
    for (int i = 0; i < 2; ++i)
      for (int jj = 0; jj < 2 - i; ++jj)
        if (key[jj] > key[jj + 1]) {
          std::swap(key[jj], key[jj + 1]);
          std::swap(pts[jj], pts[jj + 1]);
        }
    auto slot = triple_slot.find(key);
    assert(slot != triple_slot.end() && "block spans a non-rule group triple");
    const int x = local_index(gp.groups[key[0]], pts[0]);
    const int y = local_index(gp.groups[key[1]], pts[1]);
    const int z = local_index(gp.groups[key[2]], pts[2]);
    assert(cells[slot->second][x - 1][y - 1] == 0);
    cells[slot->second][x - 1][y - 1] = z;
  }

  Ingredients2 ing{SteinerTripleSystem::validate(zero_size, std::move(zero_blocks)), {}, {}};
  for (auto& table : sym_cells) {
    for (int x = 0; x < m; ++x) table[x][x] = m;
    ing.symmetric.push_back(design::sls_drop(LatinSquare::validate(std::move(table))));
  }
  for (auto& table : cells) ing.latin.push_back(LatinSquare::validate(std::move(table)));
  return ing;
}

}  // namespace stsrank::structure
