#include "stsrank/gf.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace stsrank::gf {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  a %= p;
  for (int b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  assert(false && "no inverse for zero residue");
  return 0;
}

}  // namespace

GfVector::GfVector(int p, std::vector<std::uint8_t> entries)
    : p_(p), entries_(std::move(entries)) {
  if (!is_prime(p_)) throw ValidationError("modulus must be prime");
  if (entries_.empty()) throw ValidationError("vector must have positive length");
  for (auto e : entries_)
    if (e >= p_) throw ValidationError("vector entry out of residue range");
}

GfMatrix::GfMatrix(int p, std::size_t nrows, std::size_t ncols)
    : p_(p), nrows_(nrows), ncols_(ncols), words_per_row_(0) {
  if (!is_prime(p)) throw ValidationError("modulus must be prime");
  if (ncols == 0) throw ValidationError("matrix must have at least one column");
  if (p_ == 2) {
    words_per_row_ = (ncols_ + 63) / 64;
    bits_.assign(nrows_ * words_per_row_, 0);
  } else {
    if (p_ > 255) throw ValidationError("prime modulus too large");
    vals_.assign(nrows_ * ncols_, 0);
  }
}

GfMatrix GfMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw ValidationError("matrix must have at least one row");
  GfMatrix m(p, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.ncols_)
      throw ValidationError("matrix rows must share a common length");
    for (std::size_t c = 0; c < m.ncols_; ++c) {
      int v = rows[r][c] % p;
      if (v < 0) v += p;
      m.set(r, c, v);
    }
  }
  return m;
}

int GfMatrix::at(std::size_t r, std::size_t c) const {
  assert(r < nrows_ && c < ncols_);
  if (p_ == 2)
    return static_cast<int>((bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u);
  return vals_[r * ncols_ + c];
}

void GfMatrix::set(std::size_t r, std::size_t c, int value) {
  assert(r < nrows_ && c < ncols_);
  assert(value >= 0 && value < p_);
  if (p_ == 2) {
    std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  } else {
    vals_[r * ncols_ + c] = static_cast<std::uint8_t>(value);
  }
}

std::vector<int> GfMatrix::row(std::size_t r) const {
  std::vector<int> out(ncols_);
  for (std::size_t c = 0; c < ncols_; ++c) out[c] = at(r, c);
  return out;
}

bool GfMatrix::row_is_zero(std::size_t r) const {
  if (p_ == 2) {
    for (std::size_t w = 0; w < words_per_row_; ++w)
      if (bits_[r * words_per_row_ + w]) return false;
    return true;
  }
  for (std::size_t c = 0; c < ncols_; ++c)
    if (vals_[r * ncols_ + c]) return false;
  return true;
}

void GfMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (p_ == 2) {
    for (std::size_t w = 0; w < words_per_row_; ++w)
      std::swap(bits_[a * words_per_row_ + w], bits_[b * words_per_row_ + w]);
  } else {
    for (std::size_t c = 0; c < ncols_; ++c)
      std::swap(vals_[a * ncols_ + c], vals_[b * ncols_ + c]);
  }
}

void GfMatrix::subtract_scaled_row(std::size_t dst, std::size_t src, int s) {
  s %= p_;
  if (s < 0) s += p_;
  if (s == 0) return;
  if (p_ == 2) {
    // s == 1: word-parallel xor
    for (std::size_t w = 0; w < words_per_row_; ++w)
      bits_[dst * words_per_row_ + w] ^= bits_[src * words_per_row_ + w];
  } else {
    for (std::size_t c = 0; c < ncols_; ++c) {
      int v = vals_[dst * ncols_ + c] - s * vals_[src * ncols_ + c];
      v %= p_;
      if (v < 0) v += p_;
      vals_[dst * ncols_ + c] = static_cast<std::uint8_t>(v);
    }
  }
}

void GfMatrix::scale_row(std::size_t r, int s) {
  s %= p_;
  if (s < 0) s += p_;
  if (p_ == 2 || s == 1) return;
  for (std::size_t c = 0; c < ncols_; ++c)
    vals_[r * ncols_ + c] = static_cast<std::uint8_t>(vals_[r * ncols_ + c] * s % p_);
}

void GfMatrix::truncate_rows(std::size_t n) {
  assert(n <= nrows_);
  nrows_ = n;
  if (p_ == 2)
    bits_.resize(nrows_ * words_per_row_);
  else
    vals_.resize(nrows_ * ncols_);
}

namespace {

// In-place reduction to RREF; returns the rank.
std::size_t reduce(GfMatrix& m) {
  const int p = m.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.ncols() && r < m.nrows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.nrows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.nrows()) continue;
    m.swap_rows(r, pivot);
    if (int v = m.at(r, c); v != 1) m.scale_row(r, mod_inverse(v, p));
    for (std::size_t rr = 0; rr < m.nrows(); ++rr) {
      if (rr == r) continue;
      if (int v = m.at(rr, c); v != 0) m.subtract_scaled_row(rr, r, v);
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const GfMatrix& m) {
  GfMatrix work = m;
  return static_cast<int>(reduce(work));
}

GfMatrix rref(const GfMatrix& m) {
  GfMatrix work = m;
  std::size_t r = reduce(work);
  work.truncate_rows(r);
  return work;
}

Subspace::Subspace(int p, std::size_t ambient_dim)
    : basis_(GfMatrix(p, 0, ambient_dim)) {}

Subspace Subspace::from_span(const GfMatrix& generators) {
  return Subspace(rref(generators));
}

bool Subspace::contains(const std::vector<int>& vec) const {
  if (vec.size() != ambient_dim())
    throw ValidationError("vector length does not match ambient dimension");
  const int pr = p();
  std::vector<int> v(vec);
  for (auto& e : v) {
    e %= pr;
    if (e < 0) e += pr;
  }
  for (std::size_t r = 0; r < basis_.nrows(); ++r) {
    std::size_t piv = 0;
    while (piv < ambient_dim() && basis_.at(r, piv) == 0) ++piv;
    if (piv == ambient_dim()) continue;
    const int coef = v[piv];
    if (coef == 0) continue;
    for (std::size_t c = piv; c < ambient_dim(); ++c) {
      int e = v[c] - coef * basis_.at(r, c);
      e %= pr;
      if (e < 0) e += pr;
      v[c] = e;
    }
  }
  return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

Subspace dual_basis(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  const int p = s.p();
  const GfMatrix& b = s.basis();

  std::vector<std::size_t> pivots(b.nrows());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < b.nrows(); ++r) {
    std::size_t c = 0;
    while (c < n && b.at(r, c) == 0) ++c;
    assert(c < n);
    pivots[r] = c;
    is_pivot[c] = true;
  }

  if (b.nrows() == n) return Subspace(p, n);  // full space -> zero dual

  GfMatrix gens(p, n - b.nrows(), n);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    gens.set(out, f, 1);
    for (std::size_t r = 0; r < b.nrows(); ++r) {
      int v = (p - b.at(r, f)) % p;
      gens.set(out, pivots[r], v);
    }
    ++out;
  }
  return Subspace::from_span(gens);
}

GfMatrix canonical_dual_matrix_3(unsigned v, unsigned j) {
  unsigned long cells = 1;
  for (unsigned t = 0; t < j; ++t) cells *= 3;
  if (v == 0 || v % cells != 0)
    throw ValidationError("3^j must divide v");
  const unsigned long run = v / cells;
  GfMatrix m(3, j + 1, v);
  for (unsigned long c = 0; c < v; ++c) {
    m.set(0, c, 1);
    unsigned long pattern = c / run;
    for (unsigned r = 0; r < j; ++r) {
      unsigned long digit = pattern;
      for (unsigned t = 0; t + r + 1 < j; ++t) digit /= 3;
      m.set(1 + r, c, static_cast<int>(digit % 3));
    }
  }
  return m;
}

GfMatrix canonical_dual_matrix_2(unsigned w, unsigned j) {
  if (j == 0) throw ValidationError("j must be at least 1");
  const unsigned long cells = 1ul << j;
  if (w == 0 || w % cells != 0)
    throw ValidationError("2^j must divide w");
  const unsigned long run = w / cells;
  GfMatrix m(2, j, w - 1);
  for (unsigned long c = 0; c < w - 1; ++c) {
    unsigned long pattern = c < run - 1 ? 0 : (c - (run - 1)) / run + 1;
    for (unsigned r = 0; r < j; ++r)
      m.set(r, c, static_cast<int>((pattern >> (j - 1 - r)) & 1));
  }
  return m;
}

void enumerate_subspaces(int p, unsigned n, unsigned d,
                         const std::function<void(const Subspace&)>& fn) {
  if (n > 6) throw GuardError("subspace enumeration guarded to ambient dimension 6");
  if (d > n) throw ValidationError("subspace dimension exceeds ambient dimension");
  if (!is_prime(p)) throw ValidationError("modulus must be prime");

  if (d == 0) {
    fn(Subspace(p, n));
    return;
  }

  // Enumerate RREF matrices directly: choose pivot columns, then sweep the
  // free entries (row i, column c) with c > pivot[i] and c not a pivot.
  std::vector<unsigned> pivots(d);
  for (unsigned i = 0; i < d; ++i) pivots[i] = i;

  auto emit_for_pivots = [&](const std::vector<unsigned>& piv) {
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : piv) is_pivot[c] = true;
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(i, c);

    GfMatrix m(p, d, n);
    for (unsigned i = 0; i < d; ++i) m.set(i, piv[i], 1);

    std::vector<int> assign(free_cells.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free_cells.size(); ++t)
        m.set(free_cells[t].first, free_cells[t].second, assign[t]);
      fn(Subspace::from_span(m));
      std::size_t t = 0;
      while (t < assign.size() && assign[t] == p - 1) assign[t++] = 0;
      if (t == assign.size()) break;
      ++assign[t];
    }
  };

  while (true) {
    emit_for_pivots(pivots);
    // next combination in lexicographic order
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && pivots[i] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (unsigned t = i + 1; t < d; ++t) pivots[t] = pivots[t - 1] + 1;
  }
}

std::vector<Subspace> all_subspaces(int p, unsigned n, unsigned d) {
  std::vector<Subspace> out;
  enumerate_subspaces(p, n, d, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

GfMatrix read_matrix_text(std::istream& in) {
  int p = 0;
  std::size_t nrows = 0, ncols = 0;
  if (!(in >> p >> nrows >> ncols))
    throw ValidationError("matrix text: expected header 'p nrows ncols'");
  if (nrows == 0 || ncols == 0)
    throw ValidationError("matrix text: empty matrix");
  GfMatrix m(p, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) {
      int v;
      if (!(in >> v)) throw ValidationError("matrix text: missing entries");
      if (v < 0 || v >= p) throw ValidationError("matrix text: entry out of residue range");
      m.set(r, c, v);
    }
  return m;
}

void write_matrix_text(std::ostream& out, const GfMatrix& m) {
  out << m.p() << ' ' << m.nrows() << ' ' << m.ncols() << '\n';
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    for (std::size_t c = 0; c < m.ncols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

}  // namespace stsrank::gf
