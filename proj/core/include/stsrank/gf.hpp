#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "stsrank/errors.hpp"

namespace stsrank::gf {

/// Dense vector over GF(p), entries stored as least nonnegative residues.
class GfVector {
 public:
  GfVector(int p, std::vector<std::uint8_t> entries);

  int p() const { return p_; }
  std::size_t size() const { return entries_.size(); }
  int at(std::size_t i) const { return entries_[i]; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  friend bool operator==(const GfVector&, const GfVector&) = default;

 private:
  int p_;
  std::vector<std::uint8_t> entries_;
};

/// Dense matrix over GF(p).  Rows over GF(2) are packed into 64-bit words so
/// elimination is word-parallel; other primes store one byte per entry.
class GfMatrix {
 public:
  GfMatrix(int p, std::size_t nrows, std::size_t ncols);
  static GfMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_; }
  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }

  int at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, int value);
  std::vector<int> row(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] -= s * row[src]
  void subtract_scaled_row(std::size_t dst, std::size_t src, int s);
  void scale_row(std::size_t r, int s);

  /// Keeps only the first n rows.
  void truncate_rows(std::size_t n);

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  int p_;
  std::size_t nrows_;
  std::size_t ncols_;
  std::size_t words_per_row_;        // p == 2 only
  std::vector<std::uint64_t> bits_;  // p == 2, packed row-major
  std::vector<std::uint8_t> vals_;   // p != 2, row-major
};

int rank(const GfMatrix& m);

/// Reduced row-echelon form with zero rows dropped; row space preserved.
GfMatrix rref(const GfMatrix& m);

/// A subspace of GF(p)^n held in canonical form: its basis is the unique RREF
/// of the row space, so equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace(int p, std::size_t ambient_dim);  // zero subspace
  static Subspace from_span(const GfMatrix& generators);

  int p() const { return basis_.p(); }
  std::size_t ambient_dim() const { return basis_.ncols(); }
  std::size_t dim() const { return basis_.nrows(); }
  const GfMatrix& basis() const { return basis_; }

  bool contains(const std::vector<int>& vec) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(GfMatrix basis) : basis_(std::move(basis)) {}
  GfMatrix basis_;
};

/// Canonical basis of the space of vectors orthogonal to every vector of s.
Subspace dual_basis(const Subspace& s);

/// Lemma 3.1 canonical generator: (j+1) x v over GF(3), all-one first row,
/// then every height-j base-3 pattern repeated v/3^j times, columns sorted
/// ascending by pattern value.
GfMatrix canonical_dual_matrix_3(unsigned v, unsigned j);

/// Lemma 4.1 canonical generator: j x (w-1) over GF(2), each nonzero height-j
/// pattern repeated w/2^j times, the zero pattern w/2^j - 1 times, columns
/// sorted ascending by pattern value.
GfMatrix canonical_dual_matrix_2(unsigned w, unsigned j);

/// Streams every d-dimensional subspace of GF(p)^n exactly once (canonical
/// RREF order).  Guarded to n <= 6.
void enumerate_subspaces(int p, unsigned n, unsigned d,
                         const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> all_subspaces(int p, unsigned n, unsigned d);

// Text format: header "p nrows ncols", then rows of space-separated residues.
GfMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const GfMatrix& m);

}  // namespace stsrank::gf
