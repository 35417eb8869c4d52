#include "stsrank/enumeration.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>

#include "stsrank/structure.hpp"

namespace stsrank::enumeration {

using design::LatinSquare;
using design::OneFactorization;
using design::SteinerTripleSystem;
using design::Triple;

namespace {

// ---------------------------------------------------------------------------
// Latin square backtracking: representative cells are filled row-major with
// forward checking on row/column availability bitmasks; symmetry constraints
// write whole assignment orbits at once.

struct LatinSearch {
  int n;
  LatinConstraint cons;
  std::vector<int> grid;                   // n*n, 0 = empty, values 1..n
  std::vector<std::uint32_t> row_used, col_used;
  std::vector<std::pair<int, int>> cells;  // representative cells, row-major

  LatinSearch(int n_, const LatinOptions& opts)
      : n(n_), cons(opts.constraint), grid(n_ * n_, 0), row_used(n_), col_used(n_) {
    if (opts.constant_diagonal) {
      const int d = *opts.constant_diagonal;
      if (d < 1 || d > n) throw ValidationError("diagonal value out of range");
      for (int i = 0; i < n; ++i) place(i, i, d);
    } else if (cons == LatinConstraint::IdempotentTotallySymmetric) {
      for (int i = 0; i < n; ++i) place(i, i, i + 1);
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (grid[r * n + c]) continue;
        if (cons != LatinConstraint::None && c < r) continue;  // mirrored
        cells.emplace_back(r, c);
      }
  }

  void place(int r, int c, int v) {
    grid[r * n + c] = v;
    row_used[r] |= 1u << (v - 1);
    col_used[c] |= 1u << (v - 1);
  }
  void remove(int r, int c, int v) {
    grid[r * n + c] = 0;
    row_used[r] &= ~(1u << (v - 1));
    col_used[c] &= ~(1u << (v - 1));
  }

  // 1-based orbit of the assignment f(x, y) = z under the active constraint
  int orbit(int x, int y, int z, std::array<std::array<int, 3>, 6>& out) const {
    switch (cons) {
      case LatinConstraint::None:
        out[0] = {x, y, z};
        return 1;
      case LatinConstraint::Symmetric:
        out[0] = {x, y, z};
        out[1] = {y, x, z};
        return x == y ? 1 : 2;
      case LatinConstraint::IdempotentTotallySymmetric:
        out = {{{x, y, z}, {y, x, z}, {x, z, y}, {z, x, y}, {y, z, x}, {z, y, x}}};
        return 6;
    }
    return 0;
  }

  // Applies the whole orbit; on any conflict rolls back and reports failure.
  bool try_assign(int x, int y, int z, std::vector<std::array<int, 3>>& undo) {
    std::array<std::array<int, 3>, 6> orb;
    const int cnt = orbit(x, y, z, orb);
    const std::size_t mark = undo.size();
    for (int t = 0; t < cnt; ++t) {
      const int r = orb[t][0] - 1, c = orb[t][1] - 1, v = orb[t][2];
      const int cur = grid[r * n + c];
      if (cur == v) continue;
      if (cur != 0 || (((row_used[r] | col_used[c]) >> (v - 1)) & 1u)) {
        while (undo.size() > mark) {
          const auto [rr, cc, vv] = undo.back();
          undo.pop_back();
          remove(rr, cc, vv);
        }
        return false;
      }
      place(r, c, v);
      undo.push_back({r, c, v});
    }
    return true;
  }

  template <typename Leaf>
  void run(std::size_t depth, const Leaf& leaf) {
    if (depth == cells.size()) {
      leaf(*this);
      return;
    }
    const auto [r, c] = cells[depth];
    if (grid[r * n + c]) {  // filled by an earlier orbit
      run(depth + 1, leaf);
      return;
    }
    std::uint32_t avail = ~(row_used[r] | col_used[c]) & ((1u << n) - 1);
    std::vector<std::array<int, 3>> undo;
    while (avail) {
      const int v = std::countr_zero(avail) + 1;
      avail &= avail - 1;
      undo.clear();
      if (!try_assign(r + 1, c + 1, v, undo)) continue;
      run(depth + 1, leaf);
      for (auto it = undo.rbegin(); it != undo.rend(); ++it)
        remove((*it)[0], (*it)[1], (*it)[2]);
    }
  }

  LatinSquare to_square() const {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t[r][c] = grid[r * n + c];
    return LatinSquare::validate(std::move(t));
  }
};

void check_latin_guard(int n) {
  if (n < 0) throw ValidationError("order must be nonnegative");
  if (n > 7) throw GuardError("latin square enumeration guarded to n <= 7");
}

}  // namespace

void enum_latin(int n, const LatinOptions& opts,
                const std::function<void(const LatinSquare&)>& fn) {
  check_latin_guard(n);
  if (n == 0) {
    fn(LatinSquare::validate(std::vector<std::vector<int>>{}));
    return;
  }
  LatinSearch search(n, opts);
  search.run(0, [&](const LatinSearch& s) { fn(s.to_square()); });
}

std::uint64_t enum_latin_count(int n, const LatinOptions& opts, unsigned threads) {
  check_latin_guard(n);
  if (n == 0) return 1;
  if (threads <= 1) {
    LatinSearch search(n, opts);
    std::uint64_t count = 0;
    search.run(0, [&](const LatinSearch&) { ++count; });
    return count;
  }
  // split the first decision level across workers
  std::atomic<int> next_value{1};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    for (int v = next_value.fetch_add(1); v <= n; v = next_value.fetch_add(1)) {
      LatinSearch search(n, opts);
      if (search.cells.empty()) {  // fully determined by the prefill
        if (v == 1) total.fetch_add(1);
        continue;
      }
      const auto [r, c] = search.cells.front();
      std::vector<std::array<int, 3>> undo;
      if (!search.try_assign(r + 1, c + 1, v, undo)) continue;
      std::uint64_t count = 0;
      search.run(1, [&](const LatinSearch&) { ++count; });
      total.fetch_add(count);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return total.load();
}

std::uint64_t enum_symmetric_latin_count(int n, unsigned threads) {
  return enum_latin_count(n, {LatinConstraint::Symmetric, std::nullopt}, threads);
}

// ---------------------------------------------------------------------------
// STS enumeration: branch on the lexicographically least uncovered pair.

namespace {

struct StsSearch {
  int v;
  int total_pairs;
  std::vector<int> px, py;                   // pair index -> endpoints
  std::vector<std::vector<int>> pair_index;  // endpoints -> pair index
  std::uint64_t covered = 0;
  std::vector<Triple> blocks;

  explicit StsSearch(int v_) : v(v_), pair_index(v_ + 1, std::vector<int>(v_ + 1, -1)) {
    total_pairs = v * (v - 1) / 2;
    for (int x = 1; x <= v; ++x)
      for (int y = x + 1; y <= v; ++y) {
        pair_index[x][y] = static_cast<int>(px.size());
        px.push_back(x);
        py.push_back(y);
      }
  }

  bool is_covered(int idx) const { return (covered >> idx) & 1; }

  void push_block(int x, int y, int z) {
    covered |= 1ull << pair_index[x][y];
    covered |= 1ull << pair_index[x][z];
    covered |= 1ull << pair_index[y][z];
    blocks.push_back({x, y, z});
  }
  void pop_block() {
    const auto [x, y, z] = blocks.back();
    blocks.pop_back();
    covered &= ~(1ull << pair_index[x][y]);
    covered &= ~(1ull << pair_index[x][z]);
    covered &= ~(1ull << pair_index[y][z]);
  }

  template <typename Leaf>
  void run(const Leaf& leaf) {
    const int first = std::countr_one(covered);
    if (first >= total_pairs) {
      leaf(*this);
      return;
    }
    const int x = px[first], y = py[first];
    // the third point must exceed y: smaller candidates would pair with x or
    // y through an earlier (hence covered) pair
    for (int z = y + 1; z <= v; ++z) {
      if (is_covered(pair_index[x][z]) || is_covered(pair_index[y][z])) continue;
      push_block(x, y, z);
      run(leaf);
      pop_block();
    }
  }
};

void check_sts_guard(int v) {
  if (v < 0 || (v > 1 && v % 6 != 1 && v % 6 != 3))
    throw ValidationError("no STS of order " + std::to_string(v));
  if (v > 9) throw GuardError("full STS enumeration guarded to v <= 9");
}

}  // namespace

void enum_sts(int v, const std::function<void(const SteinerTripleSystem&)>& fn) {
  check_sts_guard(v);
  if (v <= 1) {
    fn(SteinerTripleSystem::validate(v, {}));
    return;
  }
  StsSearch search(v);
  search.run([&](const StsSearch& s) {
    fn(SteinerTripleSystem::validate(s.v, s.blocks));
  });
}

std::uint64_t enum_sts_count(int v, unsigned threads) {
  check_sts_guard(v);
  if (v <= 1) return 1;
  if (threads <= 1) {
    StsSearch search(v);
    std::uint64_t count = 0;
    search.run([&](const StsSearch&) { ++count; });
    return count;
  }
  // first decision level: the block covering pair {1,2} is {1,2,z}
  std::atomic<int> next_z{3};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    for (int z = next_z.fetch_add(1); z <= v; z = next_z.fetch_add(1)) {
      StsSearch search(v);
      search.push_block(1, 2, z);
      std::uint64_t count = 0;
      search.run([&](const StsSearch&) { ++count; });
      total.fetch_add(count);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return total.load();
}

// ---------------------------------------------------------------------------
// 1-factorizations of K_n, counted unordered: the factor containing the
// lowest free edge at vertex 1 is completed first, so each partition is seen
// exactly once.

namespace {

struct FactorSearch {
  int n;
  std::vector<std::uint16_t> free_adj;  // free_adj[u]: bitmask of free edges {u, w}
  std::vector<std::vector<design::Edge>> factors;
  std::vector<design::Edge> current;

  explicit FactorSearch(int n_) : n(n_), free_adj(n_ + 1, 0) {
    for (int u = 1; u <= n; ++u)
      for (int w = 1; w <= n; ++w)
        if (w != u) free_adj[u] |= static_cast<std::uint16_t>(1u << w);
  }

  void take(int a, int b) {
    free_adj[a] &= static_cast<std::uint16_t>(~(1u << b));
    free_adj[b] &= static_cast<std::uint16_t>(~(1u << a));
  }
  void give(int a, int b) {
    free_adj[a] |= static_cast<std::uint16_t>(1u << b);
    free_adj[b] |= static_cast<std::uint16_t>(1u << a);
  }

  template <typename Leaf>
  void complete_factor(std::uint16_t unmatched, const Leaf& leaf) {
    if (!unmatched) {
      factors.push_back(current);
      current.clear();
      next_factor(leaf);
      current = factors.back();
      factors.pop_back();
      return;
    }
    const int u = std::countr_zero(unmatched);
    std::uint16_t cand = free_adj[u] & unmatched;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= static_cast<std::uint16_t>(cand - 1);
      take(u, w);
      current.push_back({u, w});
      complete_factor(unmatched & static_cast<std::uint16_t>(~((1u << u) | (1u << w))),
                      leaf);
      current.pop_back();
      give(u, w);
    }
  }

  template <typename Leaf>
  void next_factor(const Leaf& leaf) {
    if (!free_adj[1]) {  // all n-1 edges at vertex 1 used: partition complete
      leaf(*this);
      return;
    }
    const int p = std::countr_zero(free_adj[1]);
    take(1, p);
    current.push_back({1, p});
    std::uint16_t rest = 0;
    for (int u = 2; u <= n; ++u)
      if (u != p) rest |= static_cast<std::uint16_t>(1u << u);
    complete_factor(rest, leaf);
    current.pop_back();
    give(1, p);
  }
};

void check_factor_guard(int n) {
  if (n < 2 || n % 2 != 0) throw ValidationError("1-factorizations need an even order >= 2");
  if (n > 8) throw GuardError("1-factorization enumeration guarded to n <= 8");
}

}  // namespace

void enum_one_factorizations(int n, const std::function<void(const OneFactorization&)>& fn) {
  check_factor_guard(n);
  FactorSearch search(n);
  search.next_factor([&](const FactorSearch& s) {
    fn(OneFactorization::validate(s.n, s.factors));
  });
}

std::uint64_t enum_one_factorizations_count(int n) {
  check_factor_guard(n);
  FactorSearch search(n);
  std::uint64_t count = 0;
  search.next_factor([&](const FactorSearch&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------

CensusReport census_rank(int v, int p, unsigned threads) {
  check_sts_guard(v);
  const auto start = std::chrono::steady_clock::now();
  CensusReport report{v, p, {}, 0, 0.0};

  if (threads <= 1 || v <= 1) {
    enum_sts(v, [&](const SteinerTripleSystem& sts) {
      ++report.histogram[design::design_rank(sts, p)];
      ++report.total;
    });
  } else {
    std::atomic<int> next_z{3};
    std::mutex merge;
    auto worker = [&] {
      for (int z = next_z.fetch_add(1); z <= v; z = next_z.fetch_add(1)) {
        StsSearch search(v);
        search.push_block(1, 2, z);
        std::map<int, Int> local;
        Int local_total = 0;
        search.run([&](const StsSearch& s) {
          auto sts = SteinerTripleSystem::validate(s.v, s.blocks);
          ++local[design::design_rank(sts, p)];
          ++local_total;
        });
        const std::lock_guard<std::mutex> lock(merge);
        for (const auto& [r, c] : local) report.histogram[r] += c;
        report.total += local_total;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SteinerTripleSystem> enum_orthogonal_sts(const gf::Subspace& s,
                                                     std::size_t budget) {
  const structure::GroupPartition gp = structure::partition_from_dual(s);

  auto latin_pool = [](int order) {
    std::vector<LatinSquare> pool;
    enum_latin(order, {}, [&](const LatinSquare& f) { pool.push_back(f); });
    return pool;
  };
  auto symmetric_pool = [](int order) {
    std::vector<LatinSquare> pool;
    enum_latin(order, {LatinConstraint::Symmetric, std::nullopt},
               [&](const LatinSquare& f) { pool.push_back(f); });
    return pool;
  };
  // an order that carries no STS leaves the pool empty (Psi = 0)
  auto sts_pool = [](int order) {
    std::vector<SteinerTripleSystem> pool;
    try {
      enum_sts(order, [&](const SteinerTripleSystem& t) { pool.push_back(t); });
    } catch (const ValidationError&) {
    }
    return pool;
  };
  auto powd = [](double base, std::size_t e) {
    double r = 1;
    while (e--) r *= base;
    return r;
  };

  std::vector<SteinerTripleSystem> out;
  if (gp.p == 3) {
    const int m = static_cast<int>(gp.groups.front().size());
    const auto sts_opts = sts_pool(m);
    const auto latin_opts = latin_pool(m);
    if (sts_opts.empty()) return out;

    const double space = powd(static_cast<double>(sts_opts.size()), gp.groups.size()) *
                         powd(static_cast<double>(latin_opts.size()), gp.rule_triples.size());
    if (space > static_cast<double>(budget))
      throw GuardError("ingredient space exceeds the enumeration budget");

    const std::size_t slots = gp.groups.size() + gp.rule_triples.size();
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      structure::Ingredients3 ing;
      for (std::size_t g = 0; g < gp.groups.size(); ++g)
        ing.sts_parts.push_back(sts_opts[pick[g]]);
      for (std::size_t t = 0; t < gp.rule_triples.size(); ++t)
        ing.latin.push_back(latin_opts[pick[gp.groups.size() + t]]);
      out.push_back(structure::compose3(gp, ing));

      std::size_t slot = 0;
      while (slot < slots) {
        const std::size_t limit =
            slot < gp.groups.size() ? sts_opts.size() : latin_opts.size();
        if (++pick[slot] < limit) break;
        pick[slot++] = 0;
      }
      if (slot == slots) break;
    }
  } else {
    const std::size_t nonzero = gp.groups.size() - 1;
    const int zero_size = static_cast<int>(gp.groups.front().size());
    const int m = nonzero ? static_cast<int>(gp.groups[1].size()) : zero_size + 1;
    const auto sts_opts = sts_pool(zero_size);
    const auto sym_opts = symmetric_pool(m - 1);
    const auto latin_opts = latin_pool(m);
    if (sts_opts.empty()) return out;

    const double space = static_cast<double>(sts_opts.size()) *
                         powd(static_cast<double>(sym_opts.size()), nonzero) *
                         powd(static_cast<double>(latin_opts.size()), gp.rule_triples.size());
    if (space > static_cast<double>(budget))
      throw GuardError("ingredient space exceeds the enumeration budget");

    const std::size_t slots = 1 + nonzero + gp.rule_triples.size();
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      structure::Ingredients2 ing{sts_opts[pick[0]], {}, {}};
      for (std::size_t g = 0; g < nonzero; ++g)
        ing.symmetric.push_back(sym_opts[pick[1 + g]]);
      for (std::size_t t = 0; t < gp.rule_triples.size(); ++t)
        ing.latin.push_back(latin_opts[pick[1 + nonzero + t]]);
      out.push_back(structure::compose2(gp, ing));

      std::size_t slot = 0;
      while (slot < slots) {
        const std::size_t limit = slot == 0           ? sts_opts.size()
                                  : slot <= nonzero   ? sym_opts.size()
                                                      : latin_opts.size();
        if (++pick[slot] < limit) break;
        pick[slot++] = 0;
      }
      if (slot == slots) break;
    }
  }
  return out;
}

}  // namespace stsrank::enumeration
